from fractions import Fraction

import numpy as np
import pytest

from smearlab.backends import EXACT, FLOAT
from smearlab.canonical import AXES, build_canonical
from smearlab.linalg import (
    eigen_residual,
    identity_like,
    inner,
    kron,
    max_abs,
    norm2,
)
from smearlab.spin_one import (
    SmearingParams,
    braket_table,
    build_one_particle,
    conditional_probability,
    eigenbasis,
    explicit_ladder,
    explicit_matrices,
    gur_report,
    measure,
    measurement_outcomes,
    spin_flip_check,
    verify_subalgebras,
)

FLOAT_DELTAS = (0.0, 1e-6, 0.25, 1.0)
EXACT_DELTAS = (Fraction(0), Fraction(1, 4), Fraction(1))


def test_params_validation():
    with pytest.raises(ValueError):
        SmearingParams(hbar=0)
    with pytest.raises(ValueError):
        SmearingParams(hbar=1, beta=-1)
    p = SmearingParams.from_delta(0.25)
    assert p.delta == pytest.approx(0.25)
    pe = SmearingParams.exact_from_delta(Fraction(1, 4))
    assert pe.delta == Fraction(1, 4)


def test_construction_matches_golden_matrices_float():
    for delta in FLOAT_DELTAS:
        params = SmearingParams.from_delta(delta)
        ops = build_one_particle(params, FLOAT)
        fix = explicit_matrices(params, FLOAT)
        lad = explicit_ladder(params, FLOAT)
        for i in AXES:
            assert max_abs(ops.S[i] - fix[i]) < 1e-15
        assert max_abs(ops.Splus - lad["plus"]) < 1e-15
        assert max_abs(ops.Sminus - lad["minus"]) < 1e-15


def test_construction_matches_golden_matrices_exact():
    for delta in EXACT_DELTAS:
        params = SmearingParams.exact_from_delta(delta)
        ops = build_one_particle(params, EXACT)
        fix = explicit_matrices(params, EXACT)
        for i in AXES:
            assert max_abs(ops.S[i] - fix[i]) == 0.0


def test_subalgebras_float():
    for delta in FLOAT_DELTAS:
        ops = build_one_particle(SmearingParams.from_delta(delta), FLOAT)
        residuals = verify_subalgebras(ops)
        assert len(residuals) >= 18
        for label, r in residuals.items():
            assert r <= 1e-12, f"{label} residual {r} at delta={delta}"


def test_subalgebras_exact_are_identically_zero():
    for delta in EXACT_DELTAS:
        ops = build_one_particle(SmearingParams.exact_from_delta(delta), EXACT)
        for label, r in verify_subalgebras(ops).items():
            assert r == 0.0, f"{label} residual {r} at delta={delta}"


def test_eigenbases_all_axes_float():
    for delta in FLOAT_DELTAS:
        ops = build_one_particle(SmearingParams.from_delta(delta), FLOAT)
        for axis in AXES:
            basis = eigenbasis(ops, axis)
            for ket, lam in zip(basis.kets(), basis.eigenvalues()):
                assert eigen_residual(ops.S[axis], ket, lam) < 1e-12
                assert norm2(ket) == pytest.approx(1.0, abs=1e-12)
                # every eigenvector also sits in the Casimir eigenspace
                assert eigen_residual(ops.S2, ket, ops.S2[0, 0]) < 1e-12


def test_eigenbases_raw_exact():
    for delta in EXACT_DELTAS:
        ops = build_one_particle(SmearingParams.exact_from_delta(delta), EXACT)
        for axis in AXES:
            basis = eigenbasis(ops, axis, normalized=False)
            for ket, lam in zip(basis.kets(), basis.eigenvalues()):
                assert eigen_residual(ops.S[axis], ket, lam) == 0.0


def test_z_braket_table_is_identity():
    for delta in FLOAT_DELTAS:
        ops = build_one_particle(SmearingParams.from_delta(delta), FLOAT)
        table = braket_table(eigenbasis(ops, "z"))
        assert max_abs(table - identity_like(table)) < 1e-12


def test_xy_braket_overlap_structure():
    # same-sign primed/unprimed partners overlap; everything else is
    # orthonormal
    delta = 0.25
    ops = build_one_particle(SmearingParams.from_delta(delta), FLOAT)
    expected_mag = np.sqrt(delta) / np.sqrt(1 + delta)
    for axis in ("x", "y"):
        b = eigenbasis(ops, axis)
        assert abs(abs(inner(b.up, b.up_prime)) - expected_mag) < 1e-12
        assert abs(abs(inner(b.down, b.down_prime)) - expected_mag) < 1e-12
        assert abs(inner(b.up, b.down)) < 1e-12
        assert abs(inner(b.up, b.down_prime)) < 1e-12
        assert abs(inner(b.up_prime, b.down)) < 1e-12
        for ket in b.kets():
            assert norm2(ket) == pytest.approx(1.0, abs=1e-12)


def test_bad_axis_rejected():
    ops = build_one_particle(SmearingParams.from_delta(0.25), FLOAT)
    with pytest.raises(ValueError):
        eigenbasis(ops, "w")


def test_measurement_probabilities_sum_to_one():
    rng = np.random.default_rng(7)
    ops = build_one_particle(SmearingParams.from_delta(0.25), FLOAT)
    for _ in range(20):
        psi = rng.normal(size=4) + 1j * rng.normal(size=4)
        psi /= np.linalg.norm(psi)
        for axis in AXES:
            records = measurement_outcomes(psi, ops, axis)
            assert sum(r.probability for r in records) == pytest.approx(1.0)
            for r in records:
                if r.post_state is not None:
                    assert norm2(r.post_state) == pytest.approx(1.0)
                    # repeatability: measuring again gives the same outcome
                    again = measurement_outcomes(r.post_state, ops, axis)
                    repeat = next(a for a in again if a.outcome == r.outcome)
                    assert repeat.probability == pytest.approx(1.0)


def test_measurement_rejects_unnormalized_state():
    ops = build_one_particle(SmearingParams.from_delta(0.25), FLOAT)
    with pytest.raises(ValueError):
        measurement_outcomes(np.array([2.0, 0, 0, 0], dtype=complex), ops, "z")


def test_measure_is_seed_deterministic():
    ops = build_one_particle(SmearingParams.from_delta(0.25), FLOAT)
    psi = eigenbasis(ops, "z").up
    a = measure(psi, ops, "x", rng_seed=42)
    b = measure(psi, ops, "x", rng_seed=42)
    assert a.outcome == b.outcome
    # frequency over many draws tracks the analytic probability
    rng = np.random.default_rng(0)
    hits = sum(measure(psi, ops, "x", rng=rng).outcome > 0 for _ in range(2000))
    assert abs(hits / 2000 - 0.5) < 0.05


def test_conditional_probability_is_half_across_axes():
    for delta in FLOAT_DELTAS:
        ops = build_one_particle(SmearingParams.from_delta(delta), FLOAT)
        rng = np.random.default_rng(3)
        for _ in range(5):
            theta = rng.random() * 2 * np.pi
            phase = np.exp(1j * rng.random() * 2 * np.pi)
            a, ap = np.cos(theta), np.sin(theta) * phase
            for ax1 in AXES:
                for ax2 in AXES:
                    if ax1 == ax2:
                        continue
                    for s1 in (1, -1):
                        for s2 in (1, -1):
                            p = conditional_probability(
                                ops, ax1, s1, ax2, s2, alpha=a, alpha_prime=ap)
                            assert abs(p - 0.5) < 1e-12


def test_conditional_probability_same_axis_repeatability():
    ops = build_one_particle(SmearingParams.from_delta(0.25), FLOAT)
    for axis in AXES:
        assert conditional_probability(ops, axis, 1, axis, 1) == pytest.approx(1.0)
        assert conditional_probability(ops, axis, 1, axis, -1) == pytest.approx(0.0)


def test_conditional_probability_rejects_bad_mixing():
    ops = build_one_particle(SmearingParams.from_delta(0.25), FLOAT)
    with pytest.raises(ValueError):
        conditional_probability(ops, "z", 1, "x", 1, alpha=1.0, alpha_prime=1.0)


def test_spin_flips_float():
    for delta in FLOAT_DELTAS:
        ops = build_one_particle(SmearingParams.from_delta(delta), FLOAT)
        for label, r in spin_flip_check(ops).items():
            assert r < 1e-12, f"{label} residual {r} at delta={delta}"


def test_spin_flips_exact_are_identically_zero():
    for delta in EXACT_DELTAS:
        ops = build_one_particle(SmearingParams.exact_from_delta(delta), EXACT)
        for label, r in spin_flip_check(ops).items():
            assert r == 0.0, f"{label} residual {r} at delta={delta}"


def test_uncertainty_decomposition_and_robertson():
    rng = np.random.default_rng(11)
    for delta in (1e-6, 0.25, 1.0):
        ops = build_one_particle(SmearingParams.from_delta(delta), FLOAT)
        for _ in range(50):
            psi = rng.normal(size=4) + 1j * rng.normal(size=4)
            psi /= np.linalg.norm(psi)
            rep = gur_report(psi, ops)
            assert rep.max_decomposition_residual < 1e-12
            assert rep.all_bounds_satisfied
            for a in rep.per_axis.values():
                # the five-piece split misses exactly the matter-geometry
                # cross term
                assert abs(a.direct_variance - a.seven_term_sum
                           - a.cov_matter_geometry) < 1e-12


def test_gur_report_rejects_unnormalized_state():
    ops = build_one_particle(SmearingParams.from_delta(0.25), FLOAT)
    with pytest.raises(ValueError):
        gur_report(np.array([1.0, 1.0, 0, 0], dtype=complex), ops)


def test_delta_zero_limit_reduces_to_canonical():
    ops = build_one_particle(SmearingParams.from_delta(0.0), FLOAT)
    can = build_canonical(1, FLOAT)
    eye2 = np.eye(2, dtype=complex)
    for i in AXES:
        assert max_abs(ops.S[i] - kron(can.s[i], eye2)) < 1e-15
        assert max_abs(ops.sub_geometry[i]) == 0
        assert max_abs(ops.sub_interaction[i]) == 0
    assert max_abs(ops.Splus - kron(can.s_plus, eye2)) < 1e-15
