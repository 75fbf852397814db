from fractions import Fraction

import numpy as np
import pytest

from smearlab.backends import EXACT, FLOAT, ExactComplex
from smearlab.linalg import (
    anticommutator,
    as_complex,
    commutator,
    covariance,
    dagger,
    det,
    eigen_residual,
    expectation,
    gram,
    inner,
    is_exactly_zero,
    is_normalized,
    kron,
    matmul,
    max_abs,
    norm2,
    normalize,
    trace,
    variance,
    vector,
)


def _random_complex(rng, shape):
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def test_matmul_checks_dimensions():
    a = FLOAT.array([[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        matmul(a, np.zeros((3, 3), dtype=complex))


def test_commutator_antisymmetry_and_anticommutator_symmetry():
    rng = np.random.default_rng(3)
    for _ in range(20):
        a = _random_complex(rng, (4, 4))
        b = _random_complex(rng, (4, 4))
        assert max_abs(commutator(a, b) + commutator(b, a)) < 1e-12
        assert max_abs(anticommutator(a, b) - anticommutator(b, a)) < 1e-12


def test_exact_det_matches_float_lapack():
    rng = np.random.default_rng(11)
    for _ in range(10):
        num = rng.integers(-6, 7, size=(4, 4, 2))
        exact = np.empty((4, 4), dtype=object)
        for i in range(4):
            for j in range(4):
                exact[i, j] = ExactComplex(int(num[i, j, 0]), int(num[i, j, 1]))
        approx = as_complex(exact)
        d_exact = det(exact)
        d_float = det(approx)
        assert abs(complex(d_exact) - d_float) < 1e-8 * max(1.0, abs(d_float))


def test_exact_det_singular_matrix_is_zero():
    m = EXACT.array([[1, 2], [2, 4]])
    assert det(m) == ExactComplex(0)


def test_inner_conjugates_first_argument():
    u = vector([1j, 0], FLOAT)
    v = vector([1, 0], FLOAT)
    assert inner(u, v) == pytest.approx(-1j)
    assert inner(v, u) == pytest.approx(1j)


def test_norm_and_normalize_float():
    v = vector([3, 4j], FLOAT)
    assert norm2(v) == pytest.approx(25.0)
    n = normalize(v)
    assert is_normalized(n)


def test_normalize_exact_requires_perfect_square():
    v = vector([ExactComplex(3), ExactComplex(0, 4)], EXACT)
    n = normalize(v)
    assert norm2(n) == 1
    odd = vector([ExactComplex(1), ExactComplex(1)], EXACT)
    with pytest.raises(Exception):
        normalize(odd)


def test_normalize_zero_vector_raises():
    with pytest.raises(ValueError):
        normalize(vector([0, 0], FLOAT))


def test_expectation_requires_normalized_state():
    op = FLOAT.eye(2)
    with pytest.raises(ValueError):
        expectation(op, vector([2, 0], FLOAT))


def test_variance_and_covariance_agree_with_numpy():
    rng = np.random.default_rng(5)
    for _ in range(10):
        h = _random_complex(rng, (3, 3))
        a = h + dagger(h)
        h2 = _random_complex(rng, (3, 3))
        b = h2 + dagger(h2)
        psi = _random_complex(rng, 3)
        psi /= np.linalg.norm(psi)
        ea = np.vdot(psi, a @ psi)
        var_direct = np.vdot(psi, a @ (a @ psi)) - ea ** 2
        assert variance(a, psi) == pytest.approx(np.real(var_direct), abs=1e-12)
        eb = np.vdot(psi, b @ psi)
        cov_direct = np.vdot(psi, a @ (b @ psi)) - ea * eb
        assert covariance(a, b, psi) == pytest.approx(cov_direct, abs=1e-12)


def test_eigen_residual_exact_zero():
    m = EXACT.array([[2, 0], [0, 3]])
    v = vector([1, 0], EXACT)
    assert eigen_residual(m, v, 2) == 0.0
    assert eigen_residual(m, v, 3) > 0


def test_kron_index_convention():
    # composite index of |a> (x) |b> is 2a + b
    a = vector([0, 1], FLOAT)
    b = vector([1, 0], FLOAT)
    v = kron(a, b)
    assert np.argmax(np.abs(v)) == 2


def test_gram_of_orthonormal_set_is_identity():
    rng = np.random.default_rng(9)
    m = _random_complex(rng, (4, 4))
    q, _ = np.linalg.qr(m)
    g = gram([q[:, k] for k in range(4)])
    assert max_abs(g - np.eye(4)) < 1e-12


def test_trace_and_dagger():
    m = FLOAT.array([[1, 2j], [0, 3]])
    assert complex(trace(m)) == pytest.approx(4)
    assert max_abs(dagger(dagger(m)) - m) == 0


def test_is_exactly_zero():
    assert is_exactly_zero(FLOAT.zeros((2, 2)))
    assert is_exactly_zero(EXACT.zeros((2, 2)))
    assert not is_exactly_zero(FLOAT.eye(2))


def test_as_complex_roundtrip():
    m = EXACT.array([[Fraction(1, 2), 0], [ExactComplex(0, 1), 2]])
    c = as_complex(m)
    assert c.dtype == complex
    assert c[0, 0] == 0.5 and c[1, 0] == 1j
