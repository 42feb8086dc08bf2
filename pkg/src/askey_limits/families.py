"""Closed-form monic recurrence coefficients for the Askey-chart families.

Hermite, Laguerre, Jacobi and Racah come from their explicit coefficient
formulas; Hahn, Meixner, Krawtchouk and Charlier use the standard monic
recurrences, each validated in the test suite against the moment-based
oracle on the family's orthogonality weight.

Conventions:

* all polynomials are monic, x p_n = p_{n+1} + B_n p_n + C_n p_{n-1};
* Racah parameters are (alpha, beta, delta, N) with gamma fixed to -N-1,
  and its recurrence lives in the lattice variable y = x (x + delta - N);
* validity is checked per requested degree (Favard positivity up to
  max_degree), not as a global parameter region.
"""

from __future__ import annotations

from dataclasses import dataclass

from .recurrence import (
    DomainError,
    RecurrenceCoefficients,
    favard_check,
)

FAMILY_TAGS = (
    "hermite",
    "laguerre",
    "jacobi",
    "racah",
    "hahn",
    "meixner",
    "krawtchouk",
    "charlier",
)

# canonical parameter order for the text form "tag:k=v,..."
_PARAM_ORDER = {
    "hermite": (),
    "laguerre": ("alpha",),
    "jacobi": ("alpha", "beta"),
    "racah": ("alpha", "beta", "delta", "N"),
    "hahn": ("alpha", "beta", "N"),
    "meixner": ("beta", "c"),
    "krawtchouk": ("p", "N"),
    "charlier": ("a",),
}


@dataclass(frozen=True)
class JacobiParams:
    alpha: float
    beta: float

    def __post_init__(self):
        if self.alpha <= -1 or self.beta <= -1:
            raise DomainError(
                f"jacobi weight needs alpha, beta > -1 (got alpha={self.alpha}, beta={self.beta})"
            )


@dataclass(frozen=True)
class RacahParams:
    alpha: float
    beta: float
    delta: float
    bigN: float

    def __post_init__(self):
        if self.bigN <= 0:
            raise DomainError(f"racah needs N > 0 (got N={self.bigN})")


@dataclass(frozen=True)
class FamilyId:
    """A family tag plus its parameter record, e.g. jacobi:alpha=2,beta=3."""

    tag: str
    params: dict

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise DomainError(f"unknown family tag {self.tag!r}")
        expected = set(_PARAM_ORDER[self.tag])
        got = set(self.params)
        if expected != got:
            raise DomainError(
                f"{self.tag} expects parameters {sorted(expected)}, got {sorted(got)}"
            )

    def text(self) -> str:
        order = _PARAM_ORDER[self.tag]
        if not order:
            return self.tag
        body = ",".join(f"{k}={self.params[k]:g}" for k in order)
        return f"{self.tag}:{body}"

    @classmethod
    def parse(cls, text: str) -> "FamilyId":
        tag, _, body = text.partition(":")
        tag = tag.strip().lower()
        params = {}
        if body:
            for item in body.split(","):
                k, _, v = item.partition("=")
                if not _:
                    raise DomainError(f"malformed parameter {item!r} in {text!r}")
                try:
                    params[k.strip()] = float(v)
                except ValueError as exc:
                    raise DomainError(f"bad value for parameter {k.strip()!r}: {v!r}") from exc
        return cls(tag, params)


def hermite_coeffs(max_degree: int) -> RecurrenceCoefficients:
    """B_n = 0, C_n = n/2 (weight e^{-x^2})."""
    return RecurrenceCoefficients.from_functions(lambda n: 0.0, lambda n: n / 2.0, max_degree)


def laguerre_coeffs(alpha: float, max_degree: int) -> RecurrenceCoefficients:
    """B_n = 2n + alpha + 1, C_n = n (n + alpha) (weight e^{-x} x^alpha)."""
    if alpha <= -1:
        raise DomainError(f"laguerre weight needs alpha > -1 (got alpha={alpha})")
    return RecurrenceCoefficients.from_functions(
        lambda n: 2 * n + alpha + 1,
        lambda n: n * (n + alpha),
        max_degree,
    )


def jacobi_coeffs(p: JacobiParams, max_degree: int) -> RecurrenceCoefficients:
    """Monic Jacobi on (-1, 1) with weight (1-x)^alpha (1+x)^beta."""
    a, b = p.alpha, p.beta
    s = a + b

    def b_of(n):
        if n == 0:
            # (beta^2 - alpha^2) / (s (s + 2)) with the common factor s
            # cancelled, which stays finite when s = 0.
            return (b - a) / (s + 2)
        return (b * b - a * a) / ((2 * n + s) * (2 * n + s + 2))

    def c_of(n):
        return (
            4 * n * (n + a) * (n + b) * (n + s)
            / ((2 * n + s - 1) * (2 * n + s) ** 2 * (2 * n + s + 1))
        )

    return RecurrenceCoefficients.from_functions(b_of, c_of, max_degree)


def racah_coeffs(p: RacahParams, max_degree: int) -> RecurrenceCoefficients:
    """Monic Racah in the lattice variable, gamma = -N-1.

    Raises on Favard failure (e.g. max_degree > N) naming the first bad index.
    """
    a, b, de, N = p.alpha, p.beta, p.delta, p.bigN
    if max_degree > N:
        raise DomainError(f"racah degree range 0..{max_degree} exceeds N = {N}")
    s = a + b

    def b_of(n):
        t1 = (
            (n + s + 1) * (n + a + 1) * (n + b + de + 1) * (N - n)
            / ((2 * n + s + 1) * (2 * n + s + 2))
        )
        if n == 0:
            return t1  # the n factor of t2 vanishes; avoids 0/0 when s = 0
        t2 = (
            n * (n + b) * (de - a - n) * (n + N + s + 1)
            / ((2 * n + s) * (2 * n + s + 1))
        )
        return t1 + t2

    def c_of(n):
        return (
            n * (n + a) * (n + b) * (n + s) * (n + b + de)
            * (de - a - n) * (n + N + s + 1) * (N + 1 - n)
            / ((2 * n + s - 1) * (2 * n + s) ** 2 * (2 * n + s + 1))
        )

    coeffs = RecurrenceCoefficients.from_functions(b_of, c_of, max_degree)
    report = favard_check(coeffs)
    if not report.valid:
        raise DomainError(f"racah parameters leave the Favard domain: {report.reason}")
    return coeffs


def hahn_coeffs(alpha: float, beta: float, bigN: float, max_degree: int) -> RecurrenceCoefficients:
    """Monic Hahn on {0..N}, weight (alpha+1)_x (beta+1)_{N-x} / (x! (N-x)!)."""
    if alpha <= -1 or beta <= -1:
        raise DomainError("hahn weight needs alpha, beta > -1")
    if max_degree > bigN:
        raise DomainError(f"hahn degree range 0..{max_degree} exceeds N = {bigN}")
    s = alpha + beta

    def a_up(n):
        return (
            (n + s + 1) * (n + alpha + 1) * (bigN - n)
            / ((2 * n + s + 1) * (2 * n + s + 2))
        )

    def c_dn(n):
        if n == 0:
            return 0.0  # the n factor vanishes; avoids 0/0 when s = 0
        return (
            n * (n + s + bigN + 1) * (n + beta)
            / ((2 * n + s) * (2 * n + s + 1))
        )

    return RecurrenceCoefficients.from_functions(
        lambda n: a_up(n) + c_dn(n),
        lambda n: a_up(n - 1) * c_dn(n),
        max_degree,
    )


def meixner_coeffs(beta: float, c: float, max_degree: int) -> RecurrenceCoefficients:
    """Monic Meixner, weight (beta)_x c^x / x! on x = 0, 1, 2, ..."""
    if beta <= 0 or not 0 < c < 1:
        raise DomainError(f"meixner needs beta > 0 and 0 < c < 1 (got beta={beta}, c={c})")
    return RecurrenceCoefficients.from_functions(
        lambda n: (n * (1 + c) + beta * c) / (1 - c),
        lambda n: n * (n + beta - 1) * c / (1 - c) ** 2,
        max_degree,
    )


def krawtchouk_coeffs(p: float, bigN: float, max_degree: int) -> RecurrenceCoefficients:
    """Monic Krawtchouk, binomial weight C(N, x) p^x (1-p)^{N-x}."""
    if not 0 < p < 1:
        raise DomainError(f"krawtchouk needs 0 < p < 1 (got p={p})")
    if max_degree > bigN:
        raise DomainError(f"krawtchouk degree range 0..{max_degree} exceeds N = {bigN}")
    return RecurrenceCoefficients.from_functions(
        lambda n: p * bigN + n * (1 - 2 * p),
        lambda n: n * p * (1 - p) * (bigN + 1 - n),
        max_degree,
    )


def charlier_coeffs(a: float, max_degree: int) -> RecurrenceCoefficients:
    """Monic Charlier, Poisson weight a^x / x!."""
    if a <= 0:
        raise DomainError(f"charlier needs a > 0 (got a={a})")
    return RecurrenceCoefficients.from_functions(
        lambda n: n + a,
        lambda n: n * a,
        max_degree,
    )


def boundary_family_coeffs(tag: str, params: dict, max_degree: int) -> RecurrenceCoefficients:
    """Dispatcher for the discrete target families Hahn/Meixner/Krawtchouk/Charlier."""
    if tag == "hahn":
        return hahn_coeffs(params["alpha"], params["beta"], params["N"], max_degree)
    if tag == "meixner":
        return meixner_coeffs(params["beta"], params["c"], max_degree)
    if tag == "krawtchouk":
        return krawtchouk_coeffs(params["p"], params["N"], max_degree)
    if tag == "charlier":
        return charlier_coeffs(params["a"], max_degree)
    raise DomainError(f"{tag!r} is not a boundary family")


def family_coeffs(fid: FamilyId, max_degree: int) -> RecurrenceCoefficients:
    """Monic recurrence coefficients for any supported family."""
    if fid.tag == "hermite":
        return hermite_coeffs(max_degree)
    if fid.tag == "laguerre":
        return laguerre_coeffs(fid.params["alpha"], max_degree)
    if fid.tag == "jacobi":
        return jacobi_coeffs(JacobiParams(fid.params["alpha"], fid.params["beta"]), max_degree)
    if fid.tag == "racah":
        return racah_coeffs(
            RacahParams(fid.params["alpha"], fid.params["beta"], fid.params["delta"], fid.params["N"]),
            max_degree,
        )
    return boundary_family_coeffs(fid.tag, fid.params, max_degree)
