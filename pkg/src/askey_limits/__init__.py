"""Monic orthogonal polynomial recurrences and uniform limit transitions
across the Askey tableau, with oracle-based verification tooling."""

from .recurrence import (
    DegreeRangeError,
    DomainError,
    FavardReport,
    MonicPolynomialTable,
    RecurrenceCoefficients,
    RescaleMap,
    evaluate,
    favard_check,
    generate_polynomials,
    rescale_coefficients,
)
from .families import FamilyId, JacobiParams, RacahParams, family_coeffs
from .uniform import (
    InverseParams,
    JacobiInverseParams,
    identify_rescaled_family,
    jacobi_uniform_coeffs,
    racah_uniform_coeffs,
    theorem_table,
)

__version__ = "0.1.0"

__all__ = [
    "DegreeRangeError",
    "DomainError",
    "FamilyId",
    "FavardReport",
    "InverseParams",
    "JacobiInverseParams",
    "JacobiParams",
    "MonicPolynomialTable",
    "RacahParams",
    "RecurrenceCoefficients",
    "RescaleMap",
    "evaluate",
    "family_coeffs",
    "favard_check",
    "generate_polynomials",
    "identify_rescaled_family",
    "jacobi_uniform_coeffs",
    "racah_uniform_coeffs",
    "rescale_coefficients",
    "theorem_table",
]
