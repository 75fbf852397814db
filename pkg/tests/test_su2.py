import math
from fractions import Fraction

import numpy as np
import pytest

from smearlab.backends import EXACT, FLOAT
from smearlab.canonical import AXES, pauli
from smearlab.linalg import dagger, kron, max_abs, trace
from smearlab.spin_one import SmearingParams, build_one_particle
from smearlab.su2 import (
    AxisAngle,
    QuaternionParams,
    build_sigma,
    closure_check,
    compose,
    fundamental_relation_check,
    geometry_limit_sigma,
    group_element,
    hamilton_product,
    quaternion_to_axis_angle,
)


def test_generator_matrix_properties():
    for delta in (0.0, 1e-6, 0.25, 1.0):
        ss = build_sigma(delta, FLOAT)
        eye4 = np.eye(4, dtype=complex)
        for i in AXES:
            m = ss.sigma[i]
            assert abs(complex(trace(m))) < 1e-14
            assert max_abs(m - dagger(m)) < 1e-14
            assert max_abs(m @ m - eye4) < 1e-12
            assert abs(np.linalg.det(np.asarray(m, dtype=complex)) - 1.0) < 1e-12


def test_fundamental_relation_both_backends():
    for delta in (0.0, 1e-6, 0.25, 1.0):
        assert fundamental_relation_check(build_sigma(delta, FLOAT)) < 1e-12
    for delta in (Fraction(0), Fraction(1, 4), Fraction(1)):
        assert fundamental_relation_check(build_sigma(delta, EXACT)) == 0.0


def test_build_sigma_rejects_negative_delta():
    with pytest.raises(ValueError):
        build_sigma(-0.1)


def test_delta_zero_limit_is_matter_pauli():
    ss = build_sigma(0.0, FLOAT)
    sig = pauli(FLOAT)
    eye2 = np.eye(2, dtype=complex)
    for i in AXES:
        assert max_abs(ss.sigma[i] - kron(sig[i], eye2)) < 1e-15


def test_geometry_limit_constructor():
    ss = geometry_limit_sigma(FLOAT)
    sig = pauli(FLOAT)
    eye2 = np.eye(2, dtype=complex)
    for i in AXES:
        assert max_abs(ss.sigma[i] - kron(eye2, sig[i])) < 1e-15
    assert fundamental_relation_check(ss) < 1e-15


def test_sigma_matches_rescaled_spin_operators():
    for delta in (1e-6, 0.25, 1.0):
        params = SmearingParams.from_delta(delta)
        ops = build_one_particle(params, FLOAT)
        ss = build_sigma(delta, FLOAT)
        scale = float(params.hbar + params.beta) / 2
        for i in AXES:
            assert max_abs(ss.sigma[i] - ops.S[i] / scale) < 1e-12


def test_group_element_identity_and_inverse():
    ss = build_sigma(0.25, FLOAT)
    eye4 = np.eye(4, dtype=complex)
    ident = group_element(QuaternionParams(1, 0, 0, 0), ss)
    assert max_abs(ident - eye4) < 1e-15
    rng = np.random.default_rng(2)
    for _ in range(20):
        q = rng.normal(size=4)
        q /= np.linalg.norm(q)
        u = QuaternionParams(*q)
        mat = group_element(u, ss)
        inv = group_element(u.conjugate(), ss)
        assert max_abs(mat @ inv - eye4) < 1e-12
        assert max_abs(mat @ dagger(mat) - eye4) < 1e-12


def test_group_element_rejects_non_unit_parameters():
    ss = build_sigma(0.25, FLOAT)
    with pytest.raises(ValueError):
        group_element(QuaternionParams(1, 1, 0, 0), ss)


def test_axis_angle_fixture_pi_about_z():
    # theta = pi about z at delta = 0 is -i sigma_z on the matter factor
    ss = build_sigma(0.0, FLOAT)
    mat = group_element(AxisAngle(n=(0, 0, 1), theta=math.pi), ss)
    sig = pauli(FLOAT)
    assert max_abs(mat + 1j * kron(sig["z"], np.eye(2, dtype=complex))) < 1e-15


def test_axis_angle_requires_unit_axis():
    with pytest.raises(ValueError):
        AxisAngle(n=(1, 1, 0), theta=1.0).to_quaternion()


def test_quaternion_axis_angle_round_trip():
    rng = np.random.default_rng(5)
    for _ in range(50):
        n = rng.normal(size=3)
        n /= np.linalg.norm(n)
        theta = rng.random() * math.pi  # acos branch covers [0, pi]
        u = AxisAngle(n=tuple(n), theta=theta).to_quaternion()
        back = quaternion_to_axis_angle(u)
        assert back.theta == pytest.approx(theta, abs=1e-10)
        if theta > 1e-6:
            assert np.allclose(back.n, n, atol=1e-9)


def test_group_element_entries_against_closed_form():
    # for generic parameters, the (0,0) and (1,2) entries have simple
    # closed forms in delta
    delta = 0.25
    ss = build_sigma(delta, FLOAT)
    rng = np.random.default_rng(8)
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    u = QuaternionParams(*q)
    mat = group_element(u, ss)
    assert mat[0, 0] == pytest.approx(u.u0 + 1j * u.u3, abs=1e-14)
    expected_12 = -2 * u.u3 * math.sqrt(delta) / (1 + delta)
    assert mat[1, 2] == pytest.approx(expected_12, abs=1e-14)


def test_hamilton_product_axioms():
    rng = np.random.default_rng(13)
    for _ in range(20):
        a, b, c = (tuple(rng.normal(size=4)) for _ in range(3))
        ab_c = hamilton_product(hamilton_product(a, b), c)
        a_bc = hamilton_product(a, hamilton_product(b, c))
        assert np.allclose(ab_c, a_bc, atol=1e-10)
        assert hamilton_product((1, 0, 0, 0), a) == a
    # i j = k
    assert hamilton_product((0, 1, 0, 0), (0, 0, 1, 0)) == (0, 0, 0, 1)


def test_compose_preserves_unit_norm():
    rng = np.random.default_rng(21)
    for _ in range(20):
        q1, q2 = rng.normal(size=4), rng.normal(size=4)
        q1 /= np.linalg.norm(q1)
        q2 /= np.linalg.norm(q2)
        w = compose(QuaternionParams(*q1), QuaternionParams(*q2))
        assert w.norm2() == pytest.approx(1.0, abs=1e-12)


def test_closure_against_quaternion_oracle():
    rng = np.random.default_rng(34)
    for delta in (0.0, 0.25, 1.0):
        ss = build_sigma(delta, FLOAT)
        for _ in range(50):
            q1, q2 = rng.normal(size=4), rng.normal(size=4)
            q1 /= np.linalg.norm(q1)
            q2 /= np.linalg.norm(q2)
            r = closure_check(QuaternionParams(*q1), QuaternionParams(*q2), ss)
            assert r < 1e-12


def test_non_unit_parameters_break_unitarity():
    # negative control: scaling the quaternion scales det by (|u|^2)^2
    ss = build_sigma(0.25, FLOAT)
    u = QuaternionParams(1.0, 1.0, 0.0, 0.0)  # |u|^2 = 2
    bk = ss.backend
    mat = bk.scalar(u.u0) * bk.eye(4)
    for i, comp in zip(AXES, (u.u1, u.u2, u.u3)):
        mat = mat + bk.scalar(0, 1) * bk.scalar(comp) * ss.sigma[i]
    assert abs(np.linalg.det(np.asarray(mat, dtype=complex)) - 4.0) < 1e-10
