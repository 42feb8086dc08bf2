"""Uniformly rescaled families, boundary identification, and limit scans."""

import math

import pytest

from askey_limits.families import FamilyId, RacahParams, racah_coeffs
from askey_limits.recurrence import (
    DegreeRangeError,
    DomainError,
    RescaleMap,
    favard_check,
    rescale_coefficients,
)
from askey_limits.uniform import (
    DEFAULT_SAMPLE,
    InverseParams,
    JacobiInverseParams,
    LIMIT_PRESET_NAMES,
    THEOREM_ROWS,
    TableFailure,
    convergence_scan,
    identify_rescaled_family,
    jacobi_uniform_coeffs,
    jacobi_uniform_recurrence,
    limit_preset,
    racah_uniform_coeffs,
    racah_uniform_recurrence,
    row_point,
    specialization_target,
    theorem_table,
)


def test_inverse_params_validation():
    with pytest.raises(DomainError):
        JacobiInverseParams(-0.1, 0.0)
    with pytest.raises(DomainError):
        InverseParams(0.1, -0.2, 0.0, 0.0)
    assert InverseParams(0.1, 0.5, 0.0, 0.2).finite_big_n == pytest.approx(10.0)
    assert InverseParams(0.1, 0.0, 0.3, 0.2).finite_big_n is None


def test_jacobi_uniform_origin_values():
    # the vertex of the quadrant: B_n = 0, C_n = 4n
    for n in range(9):
        b, c = jacobi_uniform_coeffs(JacobiInverseParams(0.0, 0.0), n)
        assert b == 0.0
        assert c == 4.0 * n


def test_jacobi_uniform_interior_matches_direct_rescale():
    # interior point = directly rescaled Jacobi with
    # rho = (alpha+beta)^{3/2} / sqrt(alpha beta), sigma = (alpha-beta)/(alpha+beta)
    from askey_limits.families import JacobiParams, jacobi_coeffs

    ia, ib = 0.125, 0.3
    alpha, beta = 1 / ia, 1 / ib
    rho = (alpha + beta) ** 1.5 / math.sqrt(alpha * beta)
    sigma = (alpha - beta) / (alpha + beta)
    direct = rescale_coefficients(jacobi_coeffs(JacobiParams(alpha, beta), 8),
                                  RescaleMap(rho, sigma))
    uni = jacobi_uniform_recurrence(JacobiInverseParams(ia, ib), 8)
    for n in range(9):
        assert math.isclose(uni.b[n], direct.b[n], rel_tol=1e-11, abs_tol=1e-11)
        if n:
            assert math.isclose(uni.c[n], direct.c[n], rel_tol=1e-11)


def test_jacobi_uniform_continuous_at_axes():
    # values at a boundary point are the limits of nearby interior values
    for n in (1, 4, 8):
        b0, c0 = jacobi_uniform_coeffs(JacobiInverseParams(0.2, 0.0), n)
        b1, c1 = jacobi_uniform_coeffs(JacobiInverseParams(0.2, 1e-9), n)
        assert math.isclose(b0, b1, rel_tol=1e-7, abs_tol=1e-7)
        assert math.isclose(c0, c1, rel_tol=1e-7)


def test_racah_uniform_interior_matches_direct_rescale():
    # the uniform form is the rescaled four-parameter family with
    # rho^2 = s^3 / (alpha beta (beta+delta) (delta-alpha) (N+s) N), sigma = -B_0
    p = InverseParams(0.1, 0.2, 0.05, 0.1)
    alpha = 1 / p.inv_alpha
    b = 1 / p.inv_b
    d = 1 / p.inv_d
    nu = 1 / p.inv_nu
    beta = b * alpha
    delta = (b * d * nu + 1) * alpha
    big_n = b * nu
    s = alpha + beta
    rho = math.sqrt(s ** 3 / (alpha * beta * (beta + delta) * (delta - alpha) * (big_n + s) * big_n))
    rc = racah_coeffs(RacahParams(alpha, beta, delta, big_n), 8)
    direct = rescale_coefficients(rc, RescaleMap(rho, -float(rc.b[0])))
    uni = racah_uniform_recurrence(p, 8)
    for n in range(9):
        assert math.isclose(uni.b[n], direct.b[n], rel_tol=1e-12, abs_tol=1e-12)
        if n:
            assert math.isclose(uni.c[n], direct.c[n], rel_tol=1e-12)


def test_racah_uniform_vertex_is_rescaled_hermite():
    # all inverse parameters zero: B_n = 0, C_n = n
    for n in range(9):
        b, c = racah_uniform_coeffs(InverseParams(0.0, 0.0, 0.0, 0.0), n)
        assert b == 0.0
        assert c == float(n)


def test_racah_uniform_refuses_degree_beyond_system_size():
    p = InverseParams(0.1, 0.5, 0.2, 0.5)  # N = 4
    with pytest.raises(DegreeRangeError):
        racah_uniform_coeffs(p, 5)
    racah_uniform_coeffs(p, 4)  # boundary degree is fine


def test_racah_uniform_favard_on_strata():
    for zeros in (frozenset(), {"d"}, {"nu"}, {"b", "alpha"}, {"d", "nu", "b", "alpha"}):
        point = row_point(next(r for r in THEOREM_ROWS if r.zero_set == frozenset(zeros)))
        rc = racah_uniform_recurrence(point, 8)
        assert favard_check(rc).valid, zeros


def test_identify_recovers_planted_rescale():
    from askey_limits.families import laguerre_coeffs

    base = laguerre_coeffs(1.5, 8)
    for rho, sigma in ((2.0, -0.5), (-0.75, 1.2)):
        planted = rescale_coefficients(base, RescaleMap(rho, sigma))
        fit = identify_rescaled_family(planted, FamilyId.parse("laguerre:alpha=1.5"), 8)
        assert fit.matched
        assert math.isclose(fit.rho, rho, rel_tol=1e-10)
        assert math.isclose(fit.sigma, sigma, rel_tol=1e-9, abs_tol=1e-10)


def test_identify_rejects_wrong_family():
    from askey_limits.families import hermite_coeffs

    fit = identify_rescaled_family(hermite_coeffs(8),
                                   FamilyId.parse("laguerre:alpha=0"), 8)
    assert not fit.matched
    assert fit.residual > 1e-3


def test_theorem_rows_catalogue():
    assert len(THEOREM_ROWS) == 16
    assert THEOREM_ROWS[0].row_id == "none" and THEOREM_ROWS[0].dimension == 4
    ids = [r.row_id for r in THEOREM_ROWS]
    assert len(set(ids)) == 16
    targets = [r.target for r in THEOREM_ROWS]
    assert targets.count("hermite") == 4


def test_row_point_zeroes_the_stratum():
    row = next(r for r in THEOREM_ROWS if r.row_id == "d,b=inf")
    p = row_point(row)
    assert p.inv_d == 0.0 and p.inv_b == 0.0
    assert p.inv_alpha == DEFAULT_SAMPLE["alpha"]
    assert p.inv_nu == DEFAULT_SAMPLE["nu"]


def test_specialization_targets_have_valid_parameters():
    for row in THEOREM_ROWS:
        fid = specialization_target(row, row_point(row))
        assert fid.tag == row.target
        # parameter record must be admissible for the family builder
        from askey_limits.families import family_coeffs
        family_coeffs(fid, 4)


def test_theorem_table_all_rows_identify():
    results = theorem_table(n_max=8, tol=1e-8)
    assert len(results) == 16
    for r in results:
        assert r.passed, f"{r.row.row_id}: residual {r.fit.residual}"


def test_theorem_table_raises_on_forced_failure():
    with pytest.raises(TableFailure):
        theorem_table(n_max=8, tol=1e-30, raise_on_failure=True)


def test_limit_presets_and_scan_orders():
    for name in LIMIT_PRESET_NAMES:
        preset = limit_preset(name, 8)
        scan = convergence_scan(preset.path, preset.boundary, preset.default_ts, 8)
        assert len(scan.steps) == 4
        devs = [s.max_dev for s in scan.steps]
        assert devs == sorted(devs, reverse=True)  # monotone convergence
    with pytest.raises(DomainError):
        limit_preset("no-such-preset", 8)


def test_laguerre_limit_c_deviation_closed_form():
    preset = limit_preset("laguerre-to-hermite", 8)
    for t in preset.default_ts:
        alpha = 1.0 / t
        coeffs = preset.path(t)
        for n in range(1, 9):
            dev = float(coeffs.c[n]) - n / 2.0
            assert math.isclose(dev, n * n / (2 * alpha), rel_tol=1e-12)
