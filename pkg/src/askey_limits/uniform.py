"""Uniformly rescaled coefficient families, continuous in inverse parameters.

The rescaled Jacobi family depends on the point (alpha^-1, beta^-1) in the
closed quadrant; the rescaled Racah family on (alpha^-1, b^-1, d^-1, nu^-1)
in the closed orthant, where the original four Racah parameters are

    beta = b alpha,   delta = (b d nu + 1) alpha,   N = b nu.

Every coefficient formula below is an algebraic rewrite of the directly
rescaled recurrence in which all compound reciprocals are precomputed as
continuous functions of the inverse parameters, so boundary strata (any
subset of inverse parameters exactly zero) are plain evaluations with no
runtime limits.  Writing A = alpha^-1, B = b^-1, D = d^-1, V = nu^-1, the
compound reciprocals are

    w1 = 1/(alpha+beta)       = A B / (1 + B)
    w2 = 1/(beta+delta)       = A B D V / (1 + D V + B D V)
    w3 = 1/(delta-alpha)      = A B D V
    w4 = 1/(N+alpha+beta)     = A B V / (A + V + B V)     (0 when A = V = 0)
    w5 = 1/N                  = B V

and the rescaled Racah coefficients become

    C_n = n (1+nA) (1+nAB) (1+n w1) (1+n w2) (1-n w3) (1+(n+1) w4)
            (1+(1-n) w5)
          / ((1+(2n-1) w1) (1+2n w1)^2 (1+(2n+1) w1))

    B_n = -n (1+(n+1) w1) * P / ((1+2 w1) (1+2n w1) (1+(2n+2) w1)
          * sqrt((1+B) (1+DV+BDV) (A+V+BV)))

with the polynomial

    P = A (B-1) (2 + DV + BDV)
        + V (1 + BDV) (B-1) (B + 1 + 2AB)
        + B D V^2 (B + 1 + 2AB) (2 + (2n+1) A (1+B) + 2n(n+1) A^2 B).

The identity of these forms with the directly rescaled coefficients is
machine-checked symbolically by docs/derivation_check.py and numerically by
the test suite.  B_n uses the convention 0/0 -> 0 at A = V = 0, where the
whole expression tends to zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from ._numeric import DEFAULT_PREC, as_real, sqrt
from .families import FamilyId, family_coeffs
from .recurrence import (
    DomainError,
    DegreeRangeError,
    RecurrenceCoefficients,
)


@dataclass(frozen=True)
class JacobiInverseParams:
    inv_alpha: float
    inv_beta: float

    def __post_init__(self):
        if self.inv_alpha < 0 or self.inv_beta < 0:
            raise DomainError("inverse parameters must be >= 0")


@dataclass(frozen=True)
class InverseParams:
    inv_alpha: float
    inv_b: float
    inv_d: float
    inv_nu: float

    def __post_init__(self):
        for name in ("inv_alpha", "inv_b", "inv_d", "inv_nu"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be >= 0")

    @property
    def finite_big_n(self) -> float | None:
        """N = 1/(inv_b * inv_nu) on strata where it is finite, else None."""
        prod = self.inv_b * self.inv_nu
        return 1.0 / prod if prod > 0 else None


def jacobi_uniform_coeffs(p: JacobiInverseParams, n: int, prec: int = DEFAULT_PREC):
    """(B_n, C_n) of the uniformly rescaled Jacobi family at an inverse point.

    On the open quadrant this equals the directly rescaled family with
    rho = (alpha+beta)^{3/2} / sqrt(alpha beta), sigma = (alpha-beta)/(alpha+beta);
    the quadrant boundary is evaluated by the same expressions.
    """
    if n < 0:
        raise DegreeRangeError("degree must be nonnegative")
    ia = as_real(p.inv_alpha, prec)
    ib = as_real(p.inv_beta, prec)
    tot = ia + ib
    u = ia * ib / tot if tot > 0 else as_real(0, prec)   # 1/(alpha+beta)
    c = (
        4 * n * (1 + n * ia) * (1 + n * ib) * (1 + n * u)
        / ((1 + (2 * n - 1) * u) * (1 + 2 * n * u) ** 2 * (1 + (2 * n + 1) * u))
    )
    if tot > 0:
        b = (
            (ib - ia) / sqrt(tot)
            * (4 * n + 2 + 4 * n * (n + 1) * u)
            / ((1 + 2 * n * u) * (1 + (2 * n + 2) * u))
        )
    else:
        b = as_real(0, prec)
    return b, c


def racah_uniform_coeffs(p: InverseParams, n: int, prec: int = DEFAULT_PREC):
    """(B_n, C_n) of the uniformly rescaled Racah family at an inverse point.

    Refuses n > N on strata where N = 1/(inv_b inv_nu) is finite, since the
    family only has N+1 members there.
    """
    if n < 0:
        raise DegreeRangeError("degree must be nonnegative")
    big_n = p.finite_big_n
    if big_n is not None and n > big_n + 1e-12:
        raise DegreeRangeError(f"degree {n} exceeds the finite system size N = {big_n}")
    A = as_real(p.inv_alpha, prec)
    B = as_real(p.inv_b, prec)
    D = as_real(p.inv_d, prec)
    V = as_real(p.inv_nu, prec)

    w1 = A * B / (1 + B)
    dv = D * V
    bdv = B * dv
    w2 = A * bdv / (1 + dv + bdv)
    w3 = A * bdv
    den4 = A + V + B * V
    w4 = A * B * V / den4 if den4 > 0 else as_real(0, prec)
    w5 = B * V

    c = (
        n * (1 + n * A) * (1 + n * A * B) * (1 + n * w1) * (1 + n * w2)
        * (1 - n * w3) * (1 + (n + 1) * w4) * (1 + (1 - n) * w5)
        / ((1 + (2 * n - 1) * w1) * (1 + 2 * n * w1) ** 2 * (1 + (2 * n + 1) * w1))
    )

    if den4 > 0:
        poly = (
            A * (B - 1) * (2 + dv + bdv)
            + V * (1 + bdv) * (B - 1) * (B + 1 + 2 * A * B)
            + B * D * V * V * (B + 1 + 2 * A * B)
            * (2 + (2 * n + 1) * A * (1 + B) + 2 * n * (n + 1) * A * A * B)
        )
        core = poly / sqrt((1 + B) * (1 + dv + bdv) * den4)
    else:
        core = as_real(0, prec)
    b = -n * (1 + (n + 1) * w1) * core / ((1 + 2 * w1) * (1 + 2 * n * w1) * (1 + (2 * n + 2) * w1))
    return b + 0, c  # + 0 normalizes IEEE negative zero on boundary strata


def jacobi_uniform_recurrence(p: JacobiInverseParams, max_degree: int,
                              prec: int = DEFAULT_PREC) -> RecurrenceCoefficients:
    return RecurrenceCoefficients.from_functions(
        lambda n: jacobi_uniform_coeffs(p, n, prec)[0],
        lambda n: jacobi_uniform_coeffs(p, n, prec)[1],
        max_degree,
    )


def racah_uniform_recurrence(p: InverseParams, max_degree: int,
                             prec: int = DEFAULT_PREC) -> RecurrenceCoefficients:
    return RecurrenceCoefficients.from_functions(
        lambda n: racah_uniform_coeffs(p, n, prec)[0],
        lambda n: racah_uniform_coeffs(p, n, prec)[1],
        max_degree,
    )


# --- identification of rescaled families -------------------------------------

DEFAULT_FIT_TOL = 1e-8


@dataclass(frozen=True)
class FitResult:
    rho: float
    sigma: float
    residual: float
    matched: bool


def _rel(x, y) -> float:
    return abs(float(x) - float(y)) / max(1.0, abs(float(x)), abs(float(y)))


def identify_rescaled_family(coeffs: RecurrenceCoefficients,
                             candidate: "FamilyId | RecurrenceCoefficients",
                             n_max: int,
                             tol: float = DEFAULT_FIT_TOL) -> FitResult:
    """Fit the affine map under which coeffs is a rescale of the candidate.

    rho is fixed up to sign by rho^2 = C_1 / C_1^cand (the C-ratio is free of
    sigma), then sigma from B_0 = rho (B_0^cand + sigma); the residual is the
    worst relative deviation of (B_n, C_n) from (rho (B_n^cand + sigma),
    rho^2 C_n^cand) over n <= n_max.  Both signs of rho are tried because
    several boundary limits reverse orientation; ties prefer rho > 0.
    """
    cand = candidate if isinstance(candidate, RecurrenceCoefficients) \
        else family_coeffs(candidate, n_max)
    if n_max < 1 or coeffs.max_degree < n_max or cand.max_degree < n_max:
        raise DegreeRangeError("need coefficients through degree >= max(1, n_max)")
    c1, c1c = float(coeffs.c[1]), float(cand.c[1])
    if c1 <= 0 or c1c <= 0:
        raise DomainError("identification requires C_1 > 0 on both sides")

    best = None
    for sign in (1.0, -1.0):
        rho = sign * math.sqrt(c1 / c1c)
        sigma = float(coeffs.b[0]) / rho - float(cand.b[0])
        residual = 0.0
        for n in range(n_max + 1):
            residual = max(residual, _rel(coeffs.b[n], rho * (float(cand.b[n]) + sigma)))
            if n >= 1:
                residual = max(residual, _rel(coeffs.c[n], rho * rho * float(cand.c[n])))
        if best is None or residual < best.residual:
            best = FitResult(rho, sigma, residual, residual <= tol)
    return best


# --- the sixteen boundary specializations ------------------------------------

@dataclass(frozen=True)
class SpecializationRow:
    """One boundary stratum: which inverse parameters vanish, and the target."""

    zero_set: frozenset
    target: str

    @property
    def dimension(self) -> int:
        return 4 - len(self.zero_set)

    @property
    def row_id(self) -> str:
        if not self.zero_set:
            return "none"
        order = [p for p in self._id_order if p in self.zero_set]
        return ",".join(order) + "=inf"

    _id_order = ("d", "nu", "b", "alpha")


THEOREM_ROWS = (
    SpecializationRow(frozenset(), "racah"),
    SpecializationRow(frozenset({"d"}), "hahn"),
    SpecializationRow(frozenset({"nu"}), "jacobi"),
    SpecializationRow(frozenset({"b"}), "meixner"),
    SpecializationRow(frozenset({"alpha"}), "krawtchouk"),
    SpecializationRow(frozenset({"d", "nu"}), "jacobi"),
    SpecializationRow(frozenset({"d", "b"}), "meixner"),
    SpecializationRow(frozenset({"d", "alpha"}), "krawtchouk"),
    SpecializationRow(frozenset({"nu", "b"}), "laguerre"),
    SpecializationRow(frozenset({"nu", "alpha"}), "hermite"),
    SpecializationRow(frozenset({"b", "alpha"}), "charlier"),
    SpecializationRow(frozenset({"d", "nu", "b"}), "laguerre"),
    SpecializationRow(frozenset({"d", "b", "alpha"}), "charlier"),
    SpecializationRow(frozenset({"d", "nu", "alpha"}), "hermite"),
    SpecializationRow(frozenset({"nu", "b", "alpha"}), "hermite"),
    SpecializationRow(frozenset({"d", "nu", "b", "alpha"}), "hermite"),
)

#: default interior values of the free inverse parameters for sample points
DEFAULT_SAMPLE = {"alpha": 0.2, "b": 0.1, "d": 0.25, "nu": 0.4}


def row_point(row: SpecializationRow, sample: dict | None = None) -> InverseParams:
    """Inverse-parameter point on the row's stratum (zeros on the zero set)."""
    base = dict(DEFAULT_SAMPLE)
    if sample:
        base.update(sample)
    vals = {k: (0.0 if k in row.zero_set else base[k]) for k in base}
    return InverseParams(vals["alpha"], vals["b"], vals["d"], vals["nu"])


def _meixner_c(A: float, D: float, V: float) -> float:
    """Meixner c-parameter of the b = infinity stratum.

    Solves (1+c)^2 / c = k with k = (2A + ADV + V)^2 / (A (1+DV) (A+V)),
    taking the root in (0, 1).  k - 4 = (ADV - V)^2 / (A (1+DV) (A+V)) >= 0,
    with equality (c = 1, degenerate) only when alpha = d.
    """
    k = (2 * A + A * D * V + V) ** 2 / (A * (1 + D * V) * (A + V))
    disc = math.sqrt(max(k * (k - 4), 0.0))
    c = ((k - 2) - disc) / 2
    if not 0 < c < 1:
        raise DomainError(f"degenerate sample point: meixner c = {c} not in (0, 1)")
    return c


def _krawtchouk_p(B: float, D: float, V: float) -> float:
    """Krawtchouk success probability of the alpha = infinity stratum.

    With h = 1 - B - BDV(1+B) and k = h^2 / (B (1+DV+BDV)), p solves
    (1-2p)^2 = k p (1-p) with sign(1-2p) = sign(h).
    """
    h = 1 - B - B * D * V * (1 + B)
    k = h * h / (B * (1 + D * V + B * D * V))
    return (1 - math.copysign(math.sqrt(k / (4 + k)), h)) / 2


def specialization_target(row: SpecializationRow, point: InverseParams) -> FamilyId:
    """Target family with parameters resolved from the stratum sample point.

    The parameter maps are exact consequences of the uniform coefficient
    formulas on each stratum (see docs/specialization_maps.md).
    """
    A, B, D, V = point.inv_alpha, point.inv_b, point.inv_d, point.inv_nu
    z = row.zero_set
    if row.target == "racah":
        alpha, b, d, nu = 1 / A, 1 / B, 1 / D, 1 / V
        return FamilyId("racah", {
            "alpha": alpha, "beta": b * alpha,
            "delta": (b * d * nu + 1) * alpha, "N": b * nu,
        })
    if row.target == "hahn":
        return FamilyId("hahn", {"alpha": 1 / A, "beta": 1 / (A * B), "N": 1 / (B * V)})
    if row.target == "jacobi":
        return FamilyId("jacobi", {"alpha": 1 / A, "beta": 1 / (A * B)})
    if row.target == "meixner":
        return FamilyId("meixner", {"beta": 1 / A + 1, "c": _meixner_c(A, D, V)})
    if row.target == "krawtchouk":
        return FamilyId("krawtchouk", {"p": _krawtchouk_p(B, D, V), "N": 1 / (B * V)})
    if row.target == "laguerre":
        return FamilyId("laguerre", {"alpha": 1 / A})
    if row.target == "charlier":
        return FamilyId("charlier", {"a": 1 / V + D})
    if row.target == "hermite":
        return FamilyId("hermite", {})
    raise DomainError(f"unknown target {row.target!r}")


@dataclass(frozen=True)
class RowResult:
    row: SpecializationRow
    point: InverseParams
    target: FamilyId
    fit: FitResult

    @property
    def passed(self) -> bool:
        return self.fit.matched


class TableFailure(RuntimeError):
    """A specialization row failed identification."""

    def __init__(self, results):
        failed = [r.row.row_id for r in results if not r.passed]
        super().__init__(f"rows failed identification: {', '.join(failed)}")
        self.results = results


def theorem_table(n_max: int = 8, sample: dict | None = None,
                  tol: float = DEFAULT_FIT_TOL, prec: int = DEFAULT_PREC,
                  raise_on_failure: bool = False) -> list:
    """Identify every boundary stratum against its target family.

    Returns one RowResult per specialization row, in catalogue order.
    """
    results = []
    for row in THEOREM_ROWS:
        point = row_point(row, sample)
        coeffs = racah_uniform_recurrence(point, n_max, prec)
        target = specialization_target(row, point)
        fit = identify_rescaled_family(coeffs, target, n_max, tol)
        results.append(RowResult(row, point, target, fit))
    if raise_on_failure and not all(r.passed for r in results):
        raise TableFailure(results)
    return results


# --- convergence scans -------------------------------------------------------

@dataclass(frozen=True)
class ScanStep:
    t: float
    dev_b: tuple
    dev_c: tuple

    @property
    def max_dev(self) -> float:
        return max(max(self.dev_b), max(self.dev_c))

    @property
    def max_dev_c(self) -> float:
        return max(self.dev_c)


@dataclass(frozen=True)
class ScanResult:
    steps: tuple
    orders: tuple  # empirical order between consecutive steps, len = steps-1


@dataclass(frozen=True)
class LimitPreset:
    """A named limit transition: a path in t (an inverse parameter) with its
    boundary family, ready for convergence_scan."""

    name: str
    path: Callable[[float], RecurrenceCoefficients]
    boundary: RecurrenceCoefficients
    default_ts: tuple


def limit_preset(name: str, n_max: int, alpha: float = 1.0, steps: int = 4) -> LimitPreset:
    """Elementary limit transitions between the classical continuous families.

    Presets (t is the inverse of the growing parameter; default decades
    t = 10^-1 .. 10^-steps):

    * jacobi-symmetric-to-hermite: symmetric Jacobi at alpha = beta = 1/t,
      rescaled by rho = sqrt(alpha), sigma = 0.
    * jacobi-to-laguerre: Jacobi at fixed alpha, beta = 1/t, rescaled by
      rho = -beta/2, sigma = -1 (orientation-reversing).
    * laguerre-to-hermite: Laguerre at alpha = 1/t, rescaled by
      rho = 1/sqrt(2 alpha), sigma = -alpha; the C-coefficient deviation is
      exactly n^2 / (2 alpha).
    """
    from .families import JacobiParams, hermite_coeffs, jacobi_coeffs, laguerre_coeffs
    from .recurrence import RescaleMap, rescale_coefficients

    ts = tuple(10.0 ** -(k + 1) for k in range(steps))
    if name == "jacobi-symmetric-to-hermite":
        def path(t):
            a = 1.0 / t
            return rescale_coefficients(
                jacobi_coeffs(JacobiParams(a, a), n_max), RescaleMap(math.sqrt(a), 0.0)
            )
        return LimitPreset(name, path, hermite_coeffs(n_max), ts)
    if name == "jacobi-to-laguerre":
        def path(t):
            beta = 1.0 / t
            return rescale_coefficients(
                jacobi_coeffs(JacobiParams(alpha, beta), n_max), RescaleMap(-beta / 2, -1.0)
            )
        return LimitPreset(name, path, laguerre_coeffs(alpha, n_max), ts)
    if name == "laguerre-to-hermite":
        def path(t):
            a = 1.0 / t
            return rescale_coefficients(
                laguerre_coeffs(a, n_max), RescaleMap(1.0 / math.sqrt(2 * a), -a)
            )
        return LimitPreset(name, path, hermite_coeffs(n_max), ts)
    raise DomainError(f"unknown limit preset {name!r}")


LIMIT_PRESET_NAMES = (
    "jacobi-symmetric-to-hermite",
    "jacobi-to-laguerre",
    "laguerre-to-hermite",
)


def convergence_scan(path: Callable[[float], RecurrenceCoefficients],
                     boundary: RecurrenceCoefficients,
                     ts: Sequence[float], n_max: int) -> ScanResult:
    """Coefficient deviations along a path t -> coefficients as t -> boundary.

    The empirical order is log(dev_k / dev_{k+1}) / log(t_k / t_{k+1}) on the
    max deviation of consecutive steps.
    """
    if len(ts) < 1:
        raise DomainError("need at least one step")
    steps = []
    for t in ts:
        coeffs = path(t)
        dev_b = tuple(abs(float(coeffs.b[n]) - float(boundary.b[n])) for n in range(n_max + 1))
        dev_c = (0.0,) + tuple(
            abs(float(coeffs.c[n]) - float(boundary.c[n])) for n in range(1, n_max + 1)
        )
        steps.append(ScanStep(t, dev_b, dev_c))
    orders = []
    for k in range(len(steps) - 1):
        d0, d1 = steps[k].max_dev, steps[k + 1].max_dev
        t0, t1 = steps[k].t, steps[k + 1].t
        if d0 > 0 and d1 > 0 and t0 != t1:
            orders.append(math.log(d0 / d1) / math.log(t0 / t1))
        else:
            orders.append(float("nan"))
    return ScanResult(tuple(steps), tuple(orders))
