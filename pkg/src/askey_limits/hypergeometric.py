"""Terminating hypergeometric series and monic polynomial closed forms.

Provides Pochhammer symbols, evaluation of terminating pFq series by running
term ratios, and monic polynomial expansions of the classical closed forms:

* Jacobi:  2F1[-n, n+alpha+beta+1; alpha+1; (1-x)/2]
* Hahn:    3F2[-n, n+alpha+beta+1, -x; alpha+1, -N; 1]
* Racah:   4F3[-n, n+alpha+beta+1, -x, x+gamma+delta+1;
               alpha+1, beta+delta+1, gamma+1; 1],   gamma = -N-1

Racah polynomials are genuinely polynomial in the quadratic lattice variable
y = x (x + gamma + delta + 1); their monic expansion here is with respect
to y.  Monicity is the only normalization enforced: each series is expanded
and divided by its computed leading coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .recurrence import DomainError

_INT_TOL = 1e-9


def pochhammer(a, k: int):
    """Rising factorial a (a+1) ... (a+k-1); empty product for k = 0."""
    if k < 0:
        raise DomainError("pochhammer order must be nonnegative")
    out = 1.0
    for j in range(k):
        out = out * (a + j)
    return out


def _nonpositive_int(a) -> int | None:
    """Return m >= 0 with a == -m when a is a nonpositive integer, else None."""
    x = float(a)
    if x > _INT_TOL:
        return None
    m = round(-x)
    if abs(x + m) <= _INT_TOL:
        return m
    return None


@dataclass(frozen=True)
class TerminatingHypergeometric:
    """A pFq whose series terminates after n+1 terms.

    The truncation degree n is the smallest m such that some numerator
    parameter equals -m; at least one numerator parameter must be a
    nonpositive integer.
    """

    numerator_params: tuple
    denominator_params: tuple
    argument: float = 1.0
    degree: int = field(init=False)

    def __post_init__(self):
        degrees = [m for a in self.numerator_params if (m := _nonpositive_int(a)) is not None]
        if not degrees:
            raise DomainError("no numerator parameter is a nonpositive integer; series does not terminate")
        object.__setattr__(self, "degree", min(degrees))
        for j, bparam in enumerate(self.denominator_params):
            m = _nonpositive_int(bparam)
            if m is not None and m < self.degree:
                raise DomainError(
                    f"denominator parameter #{j} = {float(bparam)!r} hits a pole at term {m + 1}"
                )


def eval_terminating(h: TerminatingHypergeometric):
    """Sum of the n+1 terms, accumulated through term ratios.

    term_{k+1} / term_k = prod(a_i + k) / prod(b_j + k) * z / (k + 1),
    which avoids explicit factorials.  Termination is exact: exactly
    degree+1 terms are added.
    """
    term = 1.0
    total = term
    z = h.argument
    for k in range(h.degree):
        for a in h.numerator_params:
            term = term * (a + k)
        for b in h.denominator_params:
            term = term / (b + k)
        term = term * z / (k + 1)
        total = total + term
    return total


# --- polynomial expansion helpers (ascending coefficient lists) ---

def _padd(p, q):
    n = max(len(p), len(q))
    return [
        (p[i] if i < len(p) else 0.0) + (q[i] if i < len(q) else 0.0)
        for i in range(n)
    ]


def _pmul(p, q):
    out = [0.0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _pscale(p, c):
    return [c * a for a in p]


def _monic(series):
    lead = series[-1]
    if float(lead) == 0.0:
        raise DomainError("degenerate parameters: zero leading coefficient")
    return tuple(a / lead for a in series)


def jacobi_monic(alpha, beta, n: int) -> tuple:
    """Monic Jacobi polynomial of degree n as monomial coefficients."""
    series = [0.0] * (n + 1)
    halfarg = [0.5, -0.5]                      # (1 - x) / 2
    power = [1.0]
    for k in range(n + 1):
        coef = (
            pochhammer(-n, k) * pochhammer(n + alpha + beta + 1, k)
            / (pochhammer(alpha + 1, k) * pochhammer(1, k))
        )
        series = _padd(series, _pscale(power, coef))
        power = _pmul(power, halfarg)
    return _monic(series)


def hahn_monic(alpha, beta, bigN, n: int) -> tuple:
    """Monic Hahn polynomial of degree n <= N as monomial coefficients in x."""
    if n > bigN:
        raise DomainError(f"degree {n} exceeds N = {bigN}")
    series = [0.0]
    falling = [1.0]                            # (-x)_k, a degree-k polynomial
    for k in range(n + 1):
        coef = (
            pochhammer(-n, k) * pochhammer(n + alpha + beta + 1, k)
            / (pochhammer(alpha + 1, k) * pochhammer(-bigN, k) * pochhammer(1, k))
        )
        series = _padd(series, _pscale(falling, coef))
        falling = _pmul(falling, [float(k), -1.0])   # times (-x + k)
    return _monic(series)


def racah_monic(alpha, beta, bigN, delta, n: int) -> tuple:
    """Monic Racah polynomial of degree n <= N in the lattice variable y.

    With gamma = -N-1 the product (-x)_k (x+gamma+delta+1)_k collapses to
    (-1)^k prod_{j<k} (y - j (g + j)) where y = x (x + g) and g = delta - N,
    so the series is expanded directly in y.
    """
    if n > bigN:
        raise DomainError(f"degree {n} exceeds N = {bigN}")
    gamma = -bigN - 1
    g = delta - bigN
    series = [0.0]
    lattice = [1.0]                            # prod_{j<k} (y - j (g + j))
    sign = 1.0
    for k in range(n + 1):
        coef = (
            pochhammer(-n, k) * pochhammer(n + alpha + beta + 1, k)
            / (
                pochhammer(alpha + 1, k)
                * pochhammer(beta + delta + 1, k)
                * pochhammer(gamma + 1, k)
                * pochhammer(1, k)
            )
        )
        series = _padd(series, _pscale(lattice, sign * coef))
        lattice = _pmul(lattice, [-k * (g + k), 1.0])
        sign = -sign
    return _monic(series)


def monic_from_hypergeometric(family: str, params: dict, n: int) -> tuple:
    """Monic monomial coefficients of the named family's degree-n polynomial.

    family is one of 'jacobi', 'hahn', 'racah'.  For Racah the expansion
    variable is the quadratic lattice variable y.
    """
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if family == "jacobi":
        return jacobi_monic(params["alpha"], params["beta"], n)
    if family == "hahn":
        return hahn_monic(params["alpha"], params["beta"], params["N"], n)
    if family == "racah":
        return racah_monic(params["alpha"], params["beta"], params["N"], params["delta"], n)
    raise DomainError(f"no hypergeometric closed form for family {family!r}")
