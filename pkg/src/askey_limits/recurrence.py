"""Monic orthogonal polynomial sequences defined by three-term recurrences.

A family is encoded by its coefficient pair (B_n, C_n) in

    x p_n(x) = p_{n+1}(x) + B_n p_n(x) + C_n p_{n-1}(x),      p_0 = 1,

where the C-term is omitted at n = 0 (no fictitious p_{-1}).  By Favard's
theorem the sequence is orthogonal with respect to a positive measure exactly
when every C_n is positive and every B_n is real.

Polynomials are kept in two forms: monomial coefficient vectors (exact at
desk-scale degrees, convenient for tests) and the recurrence itself, which is
what :func:`evaluate` uses since the monomial basis is ill-conditioned at
higher degree.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Callable

from ._numeric import is_finite_real


class DomainError(ValueError):
    """A parameter is outside the admissible domain."""


class DegreeRangeError(IndexError):
    """A requested degree exceeds the available coefficient range."""


@dataclass(frozen=True)
class RecurrenceCoefficients:
    """Recurrence data for degrees 0..max_degree.

    ``b[n]`` holds B_n for 0 <= n <= max_degree.  ``c[n]`` holds C_n for
    1 <= n <= max_degree; ``c[0]`` is a placeholder (the C-term does not
    exist at n = 0) and is always 0.
    """

    b: tuple
    c: tuple

    def __post_init__(self):
        if len(self.b) != len(self.c) or not self.b:
            raise DomainError("b and c must have equal, nonzero length")
        for n, x in enumerate(self.b):
            if not is_finite_real(x):
                raise DomainError(f"B_{n} is not a finite real: {x!r}")
        for n, x in enumerate(self.c):
            if n and not is_finite_real(x):
                raise DomainError(f"C_{n} is not a finite real: {x!r}")

    @property
    def max_degree(self) -> int:
        return len(self.b) - 1

    @classmethod
    def from_functions(cls, b_of, c_of, max_degree: int) -> "RecurrenceCoefficients":
        """Tabulate B_n = b_of(n) for n <= max_degree and C_n = c_of(n) for 1 <= n."""
        if max_degree < 0:
            raise DomainError("max_degree must be nonnegative")
        b = tuple(b_of(n) for n in range(max_degree + 1))
        c = (0.0,) + tuple(c_of(n) for n in range(1, max_degree + 1))
        return cls(b, c)


@dataclass(frozen=True)
class RescaleMap:
    """Affine rescale q_n(x) = rho^n p_n(x / rho - sigma).

    rho may be negative (several boundary limits are orientation-reversing);
    it must be nonzero and finite.
    """

    rho: float
    sigma: float

    def __post_init__(self):
        if not is_finite_real(self.rho) or float(self.rho) == 0.0:
            raise DomainError("rho must be finite and nonzero")
        if not is_finite_real(self.sigma):
            raise DomainError("sigma must be a finite real")

    def inverse(self) -> "RescaleMap":
        return RescaleMap(1.0 / self.rho, -self.sigma * self.rho)


@dataclass(frozen=True)
class MonicPolynomialTable:
    """Monomial coefficient vectors of p_0..p_max_degree (ascending powers).

    polys[n] has n+1 entries with leading coefficient exactly 1.  The
    generating recurrence is retained so evaluation can run the stable
    forward recurrence instead of the monomial expansion.
    """

    polys: tuple
    recurrence: RecurrenceCoefficients

    @property
    def max_degree(self) -> int:
        return len(self.polys) - 1


@dataclass(frozen=True)
class FavardReport:
    valid: bool
    first_invalid: int | None = None
    reason: str = ""


def generate_polynomials(coeffs: RecurrenceCoefficients, max_degree: int) -> MonicPolynomialTable:
    """Build the monomial table p_0..p_max_degree from the recurrence.

    Coefficient arithmetic is exact in the working scalar type, so monicity
    holds with leading coefficient exactly 1.
    """
    if max_degree < 0:
        raise DomainError("max_degree must be nonnegative")
    if max_degree > coeffs.max_degree:
        raise DegreeRangeError(
            f"max_degree {max_degree} exceeds available coefficients ({coeffs.max_degree})"
        )
    polys = [(1.0,)]
    for n in range(max_degree):
        p_n = polys[n]
        nxt = [0.0] * (n + 2)
        for i, a in enumerate(p_n):          # x * p_n
            nxt[i + 1] += a
        for i, a in enumerate(p_n):          # - B_n p_n
            nxt[i] -= coeffs.b[n] * a
        if n > 0:                            # - C_n p_{n-1}
            for i, a in enumerate(polys[n - 1]):
                nxt[i] -= coeffs.c[n] * a
        polys.append(tuple(nxt))
    return MonicPolynomialTable(tuple(polys), coeffs)


def evaluate(table: MonicPolynomialTable, n: int, x):
    """Value of p_n at x via the forward recurrence."""
    if n < 0 or n > table.max_degree:
        raise DegreeRangeError(f"degree {n} outside table range 0..{table.max_degree}")
    rec = table.recurrence
    p_prev, p = 1.0, None
    if n == 0:
        return p_prev
    p = x - rec.b[0]
    for k in range(1, n):
        p_prev, p = p, (x - rec.b[k]) * p - rec.c[k] * p_prev
    return p


def evaluate_monomial(table: MonicPolynomialTable, n: int, x):
    """Horner evaluation of the stored monomial form (test cross-check)."""
    if n < 0 or n > table.max_degree:
        raise DegreeRangeError(f"degree {n} outside table range 0..{table.max_degree}")
    acc = 0.0
    for a in reversed(table.polys[n]):
        acc = acc * x + a
    return acc


def rescale_coefficients(coeffs: RecurrenceCoefficients, rmap: RescaleMap) -> RecurrenceCoefficients:
    """Recurrence data of q_n(x) = rho^n p_n(x / rho - sigma).

    B'_n = rho (B_n + sigma),  C'_n = rho^2 C_n.  Favard validity is
    preserved since rho^2 > 0 for any admissible map.
    """
    b = tuple(rmap.rho * (bn + rmap.sigma) for bn in coeffs.b)
    c = (0.0,) + tuple(rmap.rho * rmap.rho * cn for cn in coeffs.c[1:])
    return RecurrenceCoefficients(b, c)


def favard_check(coeffs: RecurrenceCoefficients) -> FavardReport:
    """Valid iff every C_n (1 <= n <= max_degree) is strictly positive."""
    for n in range(1, coeffs.max_degree + 1):
        if not float(coeffs.c[n]) > 0.0:
            return FavardReport(False, n, f"C_{n} = {float(coeffs.c[n])!r} is not positive")
    return FavardReport(True)


def coefficients_to_csv(coeffs: RecurrenceCoefficients) -> str:
    """One row per degree: n, B_n, C_n (C_0 written as empty)."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "B", "C"])
    for n in range(coeffs.max_degree + 1):
        w.writerow([n, repr(float(coeffs.b[n])), "" if n == 0 else repr(float(coeffs.c[n]))])
    return buf.getvalue()


def coefficients_from_csv(text: str) -> RecurrenceCoefficients:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0][:3] != ["n", "B", "C"]:
        raise DomainError("expected header 'n,B,C'")
    b, c = [], [0.0]
    for expected, row in enumerate(rows[1:]):
        n = int(row[0])
        if n != expected:
            raise DomainError(f"rows out of order at n={n}")
        b.append(float(row[1]))
        if n > 0:
            c.append(float(row[2]))
    return RecurrenceCoefficients(tuple(b), tuple(c))


def coefficients_to_json(coeffs: RecurrenceCoefficients) -> str:
    return json.dumps(
        {
            "schema": 1,
            "max_degree": coeffs.max_degree,
            "B": [float(x) for x in coeffs.b],
            "C": [None] + [float(x) for x in coeffs.c[1:]],
        },
        sort_keys=True,
    )


def coefficients_from_json(text: str) -> RecurrenceCoefficients:
    obj = json.loads(text)
    b = tuple(float(x) for x in obj["B"])
    c = (0.0,) + tuple(float(x) for x in obj["C"][1:])
    return RecurrenceCoefficients(b, c)
