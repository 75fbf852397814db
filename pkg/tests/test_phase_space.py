import math

import numpy as np
import pytest

from smearlab.phase_space import (
    DEFAULT_RAW_CONSTANTS,
    GaussianSmearedState,
    convolution_check,
    derive_constants,
    egup_bound,
    smeared_uncertainties,
)


def test_derived_constants_orders_of_magnitude():
    c = derive_constants()
    assert c.l_planck == pytest.approx(1.616e-33, rel=1e-3)
    assert c.m_planck == pytest.approx(2.176e-5, rel=1e-3)
    assert c.l_desitter == pytest.approx(1.65e28, rel=0.01)
    assert c.m_desitter == pytest.approx(2.13e-66, rel=0.01)
    assert c.rho_planck == pytest.approx(c.m_planck / c.l_planck ** 3)


def test_delta_lands_in_expected_window():
    c = derive_constants()
    assert 1e-62 <= c.delta <= 1e-60
    assert c.delta == pytest.approx(c.beta / c.hbar)


def test_derive_constants_validates_input():
    with pytest.raises(ValueError):
        derive_constants({"G": 1.0, "c": 1.0, "hbar": 1.0})
    bad = dict(DEFAULT_RAW_CONSTANTS)
    bad["Lambda"] = -1.0
    with pytest.raises(ValueError):
        derive_constants(bad)


def test_gaussian_state_validation_and_duality():
    with pytest.raises(ValueError):
        GaussianSmearedState(sigma_psi=0.0, sigma_g=1.0)
    with pytest.raises(ValueError):
        GaussianSmearedState(sigma_psi=1.0, sigma_g=-2.0)
    st = GaussianSmearedState(sigma_psi=2.0, sigma_g=5.0, hbar=3.0, beta=7.0)
    assert st.sigma_psi_momentum == pytest.approx(3.0 / 4.0)
    assert st.sigma_g_tilde * st.sigma_g == pytest.approx(7.0 / 2.0)


def test_quadrature_sum_examples():
    # 3-4-5 in position space
    st = GaussianSmearedState(sigma_psi=3.0, sigma_g=4.0)
    dx, _ = smeared_uncertainties(st)
    assert dx == pytest.approx(5.0)
    # momentum widths 0.3 and 0.4 give 0.5
    st2 = GaussianSmearedState(sigma_psi=1.0 / 0.6, sigma_g=1.0 / 0.8,
                               hbar=1.0, beta=1.0)
    _, dp = smeared_uncertainties(st2)
    assert st2.sigma_psi_momentum == pytest.approx(0.3)
    assert st2.sigma_g_tilde == pytest.approx(0.4)
    assert dp == pytest.approx(0.5)


def test_narrow_smearing_limit():
    # as the smearing width shrinks, dx approaches the bare matter width
    base = GaussianSmearedState(sigma_psi=1.0, sigma_g=1.0)
    prev = smeared_uncertainties(base)[0]
    for sg in (0.1, 0.01, 0.001):
        st = GaussianSmearedState(sigma_psi=1.0, sigma_g=sg)
        dx, _ = smeared_uncertainties(st)
        assert dx < prev
        prev = dx
    assert prev == pytest.approx(1.0, rel=1e-5)


def test_smearing_only_broadens():
    rng = np.random.default_rng(6)
    for _ in range(50):
        sp, sg = rng.uniform(0.1, 10.0, size=2)
        st = GaussianSmearedState(sigma_psi=sp, sigma_g=sg)
        dx, dp = smeared_uncertainties(st)
        assert dx >= max(sp, sg)
        assert dp >= max(st.sigma_psi_momentum, st.sigma_g_tilde)
        # the product exceeds the unsmeared hbar/2 floor
        assert dx * dp >= 0.5 * st.hbar


def test_convolution_matches_quadrature_sum():
    st = GaussianSmearedState(sigma_psi=1.0, sigma_g=1.5)
    pos_err, mom_err = convolution_check(st)
    assert pos_err < 1e-6
    assert mom_err < 1e-6
    # asymmetric widths
    st2 = GaussianSmearedState(sigma_psi=0.7, sigma_g=2.9, hbar=2.0, beta=0.5)
    pos_err, mom_err = convolution_check(st2, points=8192)
    assert pos_err < 1e-6
    assert mom_err < 1e-6


def test_convolution_rejects_under_resolved_grid():
    st = GaussianSmearedState(sigma_psi=1e-3, sigma_g=10.0)
    with pytest.raises(ValueError):
        convolution_check(st, points=256)


def test_plain_hyperbola_limit():
    dx = np.geomspace(0.1, 100.0, 50)
    curve = egup_bound(0.0, 0.0, dx)
    for s in curve.samples:
        assert s.feasible
        assert abs(s.dx * s.dp_bound - 0.5) < 1e-12


def test_gup_closed_form_eta_zero():
    alpha = 0.3
    dx = np.geomspace(0.5, 20.0, 30)
    curve = egup_bound(alpha, 0.0, dx, hbar=2.0)
    for s in curve.samples:
        expected = 2.0 * (1.0 + alpha * s.dx ** 2) / (2.0 * s.dx)
        assert s.dp_bound == pytest.approx(expected, rel=1e-14)


def test_eup_quadratic_root_satisfies_equation():
    eta = 0.05
    hbar = 1.0
    dx = np.geomspace(0.5, 50.0, 40)
    curve = egup_bound(0.0, eta, dx, hbar=hbar)
    for s in curve.feasible_samples():
        lhs = s.dx * s.dp_bound
        rhs = 0.5 * hbar * (1.0 + eta * s.dp_bound ** 2)
        # the subtraction dx - sqrt(disc) cancels at large dx, so hold
        # the residual relative to dx^2 rather than absolutely
        assert abs(lhs - rhs) < 1e-14 * max(1.0, s.dx ** 2)


def test_infeasible_region_flagged():
    # with alpha = 0 the discriminant dx^2 - hbar^2 eta goes negative
    # below dx = hbar sqrt(eta)
    eta = 1.0
    curve = egup_bound(0.0, eta, [0.5, 0.9, 1.1, 2.0], hbar=1.0)
    flags = [s.feasible for s in curve.samples]
    assert flags == [False, False, True, True]
    assert math.isnan(curve.samples[0].dp_bound)
    assert len(curve.feasible_samples()) == 2


def test_egup_bound_error_paths():
    with pytest.raises(ValueError):
        egup_bound(-0.1, 0.0, [1.0])
    with pytest.raises(ValueError):
        egup_bound(0.0, -0.1, [1.0])
    with pytest.raises(ValueError):
        egup_bound(0.0, 0.0, [1.0, 0.0])
