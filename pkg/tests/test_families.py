"""Closed-form family coefficients, identifiers, and domain validation."""

import math

import pytest

from askey_limits.families import (
    FamilyId,
    JacobiParams,
    RacahParams,
    charlier_coeffs,
    family_coeffs,
    hahn_coeffs,
    hermite_coeffs,
    jacobi_coeffs,
    krawtchouk_coeffs,
    laguerre_coeffs,
    meixner_coeffs,
    racah_coeffs,
)
from askey_limits.recurrence import DomainError, favard_check


def test_family_id_text_round_trip():
    fid = FamilyId.parse("jacobi:alpha=0.5,beta=2")
    assert fid.tag == "jacobi"
    assert fid.params == {"alpha": 0.5, "beta": 2.0}
    assert FamilyId.parse(fid.text()) == fid
    assert FamilyId.parse("hermite").text() == "hermite"


def test_family_id_rejects_bad_input():
    with pytest.raises(DomainError):
        FamilyId.parse("legendre")
    with pytest.raises(DomainError):
        FamilyId.parse("jacobi:alpha=1")          # missing beta
    with pytest.raises(DomainError):
        FamilyId.parse("jacobi:alpha=1,beta=x")
    with pytest.raises(DomainError):
        FamilyId.parse("jacobi:alpha=1,gamma=2")


def test_hermite_values():
    rc = hermite_coeffs(6)
    assert all(b == 0.0 for b in rc.b)
    assert [rc.c[n] for n in range(1, 7)] == [0.5, 1.0, 1.5, 2.0, 2.5, 3.0]


def test_laguerre_values():
    rc = laguerre_coeffs(0.5, 4)
    for n in range(5):
        assert rc.b[n] == 2 * n + 1.5
        if n:
            assert rc.c[n] == n * (n + 0.5)
    with pytest.raises(DomainError):
        laguerre_coeffs(-1.0, 3)


def test_jacobi_legendre_known_values():
    # Legendre: B_n = 0, C_n = n^2 / (4 n^2 - 1)
    rc = jacobi_coeffs(JacobiParams(0.0, 0.0), 6)
    for n in range(7):
        assert rc.b[n] == 0.0
        if n:
            assert math.isclose(rc.c[n], n * n / (4.0 * n * n - 1.0), rel_tol=1e-14)
    with pytest.raises(DomainError):
        JacobiParams(-1.5, 0.0)


def test_jacobi_b0_finite_at_zero_parameter_sum():
    rc = jacobi_coeffs(JacobiParams(0.5, -0.5), 2)
    assert math.isclose(rc.b[0], -0.5, rel_tol=1e-14)


def test_racah_favard_positive_and_bounds():
    rc = racah_coeffs(RacahParams(1.0, 2.0, 12.0, 8.0), 8)
    assert favard_check(rc).valid
    with pytest.raises(DomainError):
        racah_coeffs(RacahParams(1.0, 2.0, 12.0, 8.0), 9)
    with pytest.raises(DomainError):
        RacahParams(1.0, 2.0, 12.0, 0.0)


def test_racah_favard_failure_inside_range():
    # delta - alpha < max_degree makes some C_n nonpositive
    with pytest.raises(DomainError):
        racah_coeffs(RacahParams(1.0, 2.0, 3.0, 8.0), 5)


def test_hahn_values_and_bounds():
    rc = hahn_coeffs(0.0, 0.0, 10.0, 6)
    # alpha = beta = 0: B_n = N/2 by symmetry of the flat weight
    for n in range(7):
        assert math.isclose(rc.b[n], 5.0, rel_tol=1e-13)
    assert favard_check(rc).valid
    with pytest.raises(DomainError):
        hahn_coeffs(0.0, 0.0, 4.0, 5)
    with pytest.raises(DomainError):
        hahn_coeffs(-1.5, 0.0, 10.0, 3)


def test_meixner_krawtchouk_charlier_values():
    rc = meixner_coeffs(1.5, 0.4, 3)
    assert math.isclose(rc.b[0], 1.5 * 0.4 / 0.6, rel_tol=1e-14)
    assert math.isclose(rc.c[1], 1.5 * 0.4 / 0.36, rel_tol=1e-14)

    rc = krawtchouk_coeffs(0.3, 12.0, 3)
    assert math.isclose(rc.b[0], 3.6, rel_tol=1e-14)
    assert math.isclose(rc.c[1], 0.3 * 0.7 * 12.0, rel_tol=1e-14)

    rc = charlier_coeffs(1.7, 3)
    assert rc.b[2] == 2 + 1.7
    assert rc.c[2] == 2 * 1.7

    with pytest.raises(DomainError):
        meixner_coeffs(1.5, 1.2, 3)
    with pytest.raises(DomainError):
        krawtchouk_coeffs(0.0, 12.0, 3)
    with pytest.raises(DomainError):
        charlier_coeffs(0.0, 3)


def test_family_coeffs_dispatch_consistency():
    cases = [
        ("hermite", hermite_coeffs(5)),
        ("laguerre:alpha=2", laguerre_coeffs(2.0, 5)),
        ("jacobi:alpha=0.5,beta=2", jacobi_coeffs(JacobiParams(0.5, 2.0), 5)),
        ("hahn:alpha=0,beta=1,N=10", hahn_coeffs(0.0, 1.0, 10.0, 5)),
        ("meixner:beta=1.5,c=0.4", meixner_coeffs(1.5, 0.4, 5)),
        ("krawtchouk:p=0.3,N=12", krawtchouk_coeffs(0.3, 12.0, 5)),
        ("charlier:a=1.7", charlier_coeffs(1.7, 5)),
        ("racah:alpha=1,beta=2,delta=12,N=8", racah_coeffs(RacahParams(1, 2, 12, 8), 5)),
    ]
    for text, expected in cases:
        got = family_coeffs(FamilyId.parse(text), 5)
        assert got.b == expected.b and got.c == expected.c, text


def test_all_families_satisfy_favard():
    for text in (
        "hermite", "laguerre:alpha=0", "jacobi:alpha=0,beta=0",
        "hahn:alpha=0,beta=0,N=10", "meixner:beta=2,c=0.3",
        "krawtchouk:p=0.5,N=9", "charlier:a=0.8",
        "racah:alpha=1,beta=2,delta=12,N=8",
    ):
        assert favard_check(family_coeffs(FamilyId.parse(text), 8)).valid, text
