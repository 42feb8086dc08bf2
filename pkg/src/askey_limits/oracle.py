"""Independent ground truth for recurrence coefficients.

Recurrence coefficients of a positive measure are recovered from moments (or
directly from a discrete support) by the Stieltjes procedure, and tables are
checked for orthogonality by explicit Gram matrices.  Moments of the three
continuous weights are analytic Gamma/Beta closed forms; no numerical
quadrature over infinite intervals is involved.

Continuous weights in scope:

* hermite:        e^{-x^2} on (-inf, inf)
* laguerre(a):    e^{-x} x^a on (0, inf)
* jacobi(a, b):   (1-x)^a (1+x)^b on (-1, 1)

All moment sequences are normalized to total mass 1 (the Stieltjes output is
invariant under positive scaling of the measure anyway).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import mpmath

from ._numeric import DEFAULT_PREC, as_real
from .hypergeometric import pochhammer
from .recurrence import (
    DomainError,
    MonicPolynomialTable,
    RecurrenceCoefficients,
    evaluate,
)


class MeasureDegeneracyError(ValueError):
    """The moment sequence does not come from a positive measure rich enough
    for the requested degree."""

    def __init__(self, order: int, detail: str = ""):
        super().__init__(f"measure degenerate at order {order}" + (f": {detail}" if detail else ""))
        self.order = order


@dataclass(frozen=True)
class DiscreteMeasure:
    points: tuple
    weights: tuple

    def __post_init__(self):
        if len(self.points) != len(self.weights) or not self.points:
            raise DomainError("points and weights must have equal, nonzero length")
        if len(set(map(float, self.points))) != len(self.points):
            raise DomainError("support points must be distinct")
        if any(float(w) <= 0 for w in self.weights):
            raise DomainError("weights must be positive")

    @classmethod
    def from_csv(cls, text: str) -> "DiscreteMeasure":
        """Parse 'point,weight' lines; a leading header row is allowed."""
        pts, wts = [], []
        for row in csv.reader(io.StringIO(text)):
            if not row or not row[0].strip():
                continue
            try:
                p, w = float(row[0]), float(row[1])
            except ValueError:
                if not pts:
                    continue  # header
                raise DomainError(f"malformed measure row: {row!r}")
            pts.append(p)
            wts.append(w)
        return cls(tuple(pts), tuple(wts))


@dataclass(frozen=True)
class MomentSequence:
    moments: tuple
    source: str = "analytic"

    @property
    def k_max(self) -> int:
        return len(self.moments) - 1


def hermite_moments(k_max: int) -> MomentSequence:
    """Normalized moments of e^{-x^2}: m_0 = 1, m_k = (k-1)/2 m_{k-2}, odd 0."""
    m = [1.0, 0.0]
    for k in range(2, k_max + 1):
        m.append(0.0 if k % 2 else (k - 1) / 2.0 * m[k - 2])
    return MomentSequence(tuple(m[: k_max + 1]))


def laguerre_moments(alpha: float, k_max: int,
                     prec: int = DEFAULT_PREC) -> MomentSequence:
    """Normalized moments of e^{-x} x^alpha: m_k = (alpha+1)_k."""
    if alpha <= -1:
        raise DomainError("laguerre weight needs alpha > -1")
    with mpmath.workprec(max(prec, DEFAULT_PREC)):
        a = as_real(alpha, prec)
        moments = tuple(pochhammer(a + 1, k) for k in range(k_max + 1))
    return MomentSequence(moments)


def jacobi_moments(alpha: float, beta: float, k_max: int,
                   prec: int = DEFAULT_PREC) -> MomentSequence:
    """Normalized moments of (1-x)^alpha (1+x)^beta on (-1, 1).

    Substituting x = 1 - 2t reduces each moment to Beta-function ratios:
    m_k = sum_j C(k, j) (-2)^j (alpha+1)_j / (alpha+beta+2)_j.  The sum
    alternates and cancels heavily with growing k, so it honours prec.
    """
    if alpha <= -1 or beta <= -1:
        raise DomainError("jacobi weight needs alpha, beta > -1")
    with mpmath.workprec(max(prec, DEFAULT_PREC)):
        a = as_real(alpha, prec)
        b = as_real(beta, prec)
        moments = []
        for k in range(k_max + 1):
            m = as_real(0, prec)
            for j in range(k + 1):
                m += (
                    math.comb(k, j) * as_real(-2, prec) ** j
                    * pochhammer(a + 1, j) / pochhammer(a + b + 2, j)
                )
            moments.append(m)
    return MomentSequence(tuple(moments))


def discrete_moments(measure: DiscreteMeasure, k_max: int) -> MomentSequence:
    total = sum(measure.weights)
    moments = []
    for k in range(k_max + 1):
        moments.append(sum(w * x ** k for x, w in zip(measure.points, measure.weights)) / total)
    return MomentSequence(tuple(moments), source="discrete-sum")


def moments_of(weight: "str | DiscreteMeasure", k_max: int, **params) -> MomentSequence:
    """Moment sequence of a named continuous weight or a discrete measure."""
    if isinstance(weight, DiscreteMeasure):
        return discrete_moments(weight, k_max)
    if weight == "hermite":
        return hermite_moments(k_max)
    if weight == "laguerre":
        return laguerre_moments(params["alpha"], k_max)
    if weight == "jacobi":
        return jacobi_moments(params["alpha"], params["beta"], k_max)
    raise DomainError(f"no analytic moments for weight {weight!r}")


# --- discrete weights of the Askey-chart families ----------------------------

def hahn_measure(alpha: float, beta: float, big_n: int) -> DiscreteMeasure:
    """Weight (alpha+1)_x (beta+1)_{N-x} / (x! (N-x)!) on {0, ..., N}."""
    n = int(big_n)
    pts = tuple(float(x) for x in range(n + 1))
    wts = tuple(
        pochhammer(alpha + 1, x) * pochhammer(beta + 1, n - x)
        / (math.factorial(x) * math.factorial(n - x))
        for x in range(n + 1)
    )
    return DiscreteMeasure(pts, wts)


def krawtchouk_measure(p: float, big_n: int) -> DiscreteMeasure:
    n = int(big_n)
    pts = tuple(float(x) for x in range(n + 1))
    wts = tuple(math.comb(n, x) * p ** x * (1 - p) ** (n - x) for x in range(n + 1))
    return DiscreteMeasure(pts, wts)


def charlier_measure(a: float, k_max: int = 16, tail: float = 1e-24) -> DiscreteMeasure:
    """Poisson weight a^x / x!, truncated once the k_max-th moment tail is
    negligible relative to the accumulated mass."""
    pts, wts = [], []
    w = math.exp(-a)  # scale for overflow safety only
    x = 0
    while True:
        pts.append(float(x))
        wts.append(w)
        x += 1
        w = w * a / x
        if x > 2 * a + 10 and w * (x ** k_max) < tail * sum(wts):
            break
    return DiscreteMeasure(tuple(pts), tuple(wts))


def meixner_measure(beta: float, c: float, k_max: int = 16, tail: float = 1e-24) -> DiscreteMeasure:
    """Weight (beta)_x c^x / x! on x = 0, 1, ..., truncated like charlier_measure."""
    pts, wts = [], []
    w = 1.0
    x = 0
    while True:
        pts.append(float(x))
        wts.append(w)
        w = w * (beta + x) * c / (x + 1)
        x += 1
        if x > 10 and w * (x ** k_max) < tail * sum(wts):
            break
    return DiscreteMeasure(tuple(pts), tuple(wts))


# --- the Stieltjes procedure -------------------------------------------------

def stieltjes(moments: MomentSequence, n_max: int, prec: int = DEFAULT_PREC) -> RecurrenceCoefficients:
    """Monic recurrence coefficients of the measure behind a moment sequence.

    Runs the classical procedure on monomial coefficient vectors: with
    h_n = <p_n, p_n>, B_n = <x p_n, p_n> / h_n and C_n = h_n / h_{n-1},
    where inner products are moment contractions.  Positivity of the running
    h_n is the Hankel positivity check; a failure at order n means the
    measure has fewer than n+1 points of increase (or is not positive).

    Moment-based determination is ill-conditioned as n grows; prefer
    prec > 53 beyond n_max ~ 12.
    """
    # B_{n_max} contracts x p_n against p_n, hence the odd extra order
    if 2 * n_max + 1 > moments.k_max:
        raise DomainError(f"need moments through order {2 * n_max + 1}, have {moments.k_max}")
    with mpmath.workprec(max(prec, DEFAULT_PREC)):
        mu = [as_real(m, prec) for m in moments.moments]

        def inner(p, q):
            acc = mu[0] * 0
            for i, a in enumerate(p):
                if float(a) == 0.0:
                    continue
                for j, bq in enumerate(q):
                    acc += a * bq * mu[i + j]
            return acc

        one = as_real(1, prec)
        polys = [[one]]
        h_prev = None
        b, c = [], [0.0]
        for n in range(n_max + 1):
            p_n = polys[n]
            h_n = inner(p_n, p_n)
            if not float(h_n) > 0.0:
                raise MeasureDegeneracyError(n, f"squared norm h_{n} = {float(h_n)!r}")
            xp = [mu[0] * 0] + list(p_n)
            b_n = inner(xp, p_n) / h_n
            b.append(b_n)
            if n > 0:
                c.append(h_n / h_prev)
            if n < n_max:
                nxt = list(xp)
                for i, a in enumerate(p_n):
                    nxt[i] -= b_n * a
                if n > 0:
                    for i, a in enumerate(polys[n - 1]):
                        nxt[i] -= c[n] * a
                polys.append(nxt)
            h_prev = h_n
    return RecurrenceCoefficients(tuple(b), tuple(c))


def stieltjes_discrete(measure: DiscreteMeasure, n_max: int) -> RecurrenceCoefficients:
    """Stieltjes procedure on the support itself (pointwise, well-conditioned).

    Only degrees up to cardinality - 1 are determined; beyond that the
    squared norms vanish and a degeneracy error is raised.
    """
    pts = [float(x) for x in measure.points]
    wts = [float(w) for w in measure.weights]
    if n_max > len(pts) - 1:
        raise MeasureDegeneracyError(len(pts), f"only {len(pts)} support points")

    def inner(u, v):
        return sum(w * a * bb for w, a, bb in zip(wts, u, v))

    p_prev = None
    p_n = [1.0] * len(pts)
    h_prev = None
    b, c = [], [0.0]
    for n in range(n_max + 1):
        h_n = inner(p_n, p_n)
        if not h_n > 0.0:
            raise MeasureDegeneracyError(n, f"squared norm h_{n} = {h_n!r}")
        b_n = inner([x * v for x, v in zip(pts, p_n)], p_n) / h_n
        b.append(b_n)
        if n > 0:
            c.append(h_n / h_prev)
        nxt = [
            (x - b_n) * v - (c[n] * u if n > 0 else 0.0)
            for x, v, u in zip(pts, p_n, p_prev if p_prev else p_n)
        ]
        p_prev, p_n, h_prev = p_n, nxt, h_n
    return RecurrenceCoefficients(tuple(b), tuple(c))


def family_oracle(fid, n_max: int, prec: int = DEFAULT_PREC) -> RecurrenceCoefficients:
    """Oracle-side recurrence coefficients for a family with a known weight.

    Continuous weights go through analytic moments; discrete weights through
    the pointwise procedure.  Racah has no weight in scope and is refused
    (its closed forms are cross-checked against the hypergeometric route
    instead).
    """
    tag, params = fid.tag, fid.params
    # Moment-based determination loses ~1.4 digits per degree (Hankel
    # conditioning), so the continuous-weight oracle always runs with a
    # generous precision head-room; callers may raise it further.
    mprec = max(prec, 64 + 12 * n_max)
    if tag == "hermite":
        return stieltjes(hermite_moments(2 * n_max + 1), n_max, mprec)
    if tag == "laguerre":
        return stieltjes(laguerre_moments(params["alpha"], 2 * n_max + 1, mprec), n_max, mprec)
    if tag == "jacobi":
        return stieltjes(
            jacobi_moments(params["alpha"], params["beta"], 2 * n_max + 1, mprec), n_max, mprec
        )
    if tag == "hahn":
        return stieltjes_discrete(hahn_measure(params["alpha"], params["beta"], int(params["N"])), n_max)
    if tag == "krawtchouk":
        return stieltjes_discrete(krawtchouk_measure(params["p"], int(params["N"])), n_max)
    if tag == "charlier":
        return stieltjes_discrete(charlier_measure(params["a"], k_max=2 * n_max + 2), n_max)
    if tag == "meixner":
        return stieltjes_discrete(meixner_measure(params["beta"], params["c"], k_max=2 * n_max + 2), n_max)
    raise DomainError(
        f"no weight-based oracle for family {tag!r}; use the hypergeometric cross-check"
    )


# --- orthogonality checks ----------------------------------------------------

@dataclass(frozen=True)
class OrthogonalityReport:
    gram: tuple          # normalized inner products, row-major (n_max+1)^2
    n_max: int
    max_off_diagonal: float

    def entry(self, n: int, m: int) -> float:
        return self.gram[n * (self.n_max + 1) + m]


def orthogonality_check(table: MonicPolynomialTable,
                        measure: "DiscreteMeasure | MomentSequence",
                        n_max: int | None = None) -> OrthogonalityReport:
    """Gram matrix of p_0..p_n_max, off-diagonals normalized by the norms."""
    if n_max is None:
        n_max = table.max_degree
    if n_max > table.max_degree:
        raise DomainError(f"table only reaches degree {table.max_degree}")

    if isinstance(measure, DiscreteMeasure):
        vals = [
            [evaluate(table, n, float(x)) for x in measure.points]
            for n in range(n_max + 1)
        ]
        def inner(n, m):
            return sum(w * a * bb for w, a, bb in zip(measure.weights, vals[n], vals[m]))
    else:
        if 2 * n_max > measure.k_max:
            raise DomainError(f"need moments through order {2 * n_max}, have {measure.k_max}")
        def inner(n, m):
            acc = 0.0
            for i, a in enumerate(table.polys[n]):
                for j, bb in enumerate(table.polys[m]):
                    acc += float(a) * float(bb) * float(measure.moments[i + j])
            return acc

    norms = []
    for n in range(n_max + 1):
        h = inner(n, n)
        if not float(h) > 0.0:
            raise MeasureDegeneracyError(n, f"squared norm h_{n} = {float(h)!r}")
        norms.append(math.sqrt(float(h)))

    gram = []
    max_off = 0.0
    for n in range(n_max + 1):
        for m in range(n_max + 1):
            g = float(inner(n, m)) / (norms[n] * norms[m])
            gram.append(g)
            if n != m:
                max_off = max(max_off, abs(g))
    return OrthogonalityReport(tuple(gram), n_max, max_off)
