"""Dense complex matrix/vector toolkit over the pluggable scalar backends.

Matrices and kets are plain numpy arrays: ``complex128`` for the float
backend, object-dtype holding :class:`~smearlab.backends.ExactComplex`
for the exact backend.  All operations are pure functions; nothing here
mutates its inputs.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .backends import DEFAULT_TOL, EXACT, ExactComplex, backend_of, rational_sqrt


def vector(entries, backend) -> np.ndarray:
    """Build a ket (1-d array) in the given backend."""
    if backend is EXACT:
        out = np.empty(len(entries), dtype=object)
        for k, v in enumerate(entries):
            out[k] = v if isinstance(v, ExactComplex) else ExactComplex(v)
        return out
    return np.array([complex(v) for v in entries], dtype=complex)


def _require_square(a: np.ndarray):
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[-1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return np.dot(a, b)


def matvec(a: np.ndarray, v: np.ndarray) -> np.ndarray:
    return matmul(a, v)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; row blocks come from the first factor, so the
    composite index of |a> (x) |b> is 2a+b for 2x2 factors."""
    return np.kron(a, b)


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    _require_square(a)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return matmul(a, b) - matmul(b, a)


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    _require_square(a)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return matmul(a, b) + matmul(b, a)


def dagger(a: np.ndarray) -> np.ndarray:
    return np.conjugate(a).T if a.ndim == 2 else np.conjugate(a)


def trace(a: np.ndarray):
    _require_square(a)
    return a.trace()


def det(a: np.ndarray):
    """Determinant: LAPACK LU for the float backend, exact Gaussian
    elimination with pivoting for the exact backend."""
    _require_square(a)
    if a.dtype != object:
        return complex(np.linalg.det(a))
    m = a.copy()
    n = m.shape[0]
    result = ExactComplex(1)
    for col in range(n):
        pivot = None
        for row in range(col, n):
            if m[row, col] != 0:
                pivot = row
                break
        if pivot is None:
            return ExactComplex(0)
        if pivot != col:
            m[[col, pivot]] = m[[pivot, col]]
            result = -result
        p = m[col, col]
        result = result * p
        for row in range(col + 1, n):
            factor = m[row, col] / p
            if factor != 0:
                m[row, col:] = m[row, col:] - factor * m[col, col:]
    return result


def inner(u: np.ndarray, v: np.ndarray):
    """<u|v> with conjugation on the first argument."""
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    return np.dot(np.conjugate(u), v)


def norm2(v: np.ndarray):
    """Squared 2-norm; a Fraction in the exact backend."""
    if v.dtype == object:
        total = Fraction(0)
        for x in v:
            total += x.abs2()
        return total
    return float(np.real(np.vdot(v, v)))


def normalize(v: np.ndarray) -> np.ndarray:
    """Scale to unit norm.  Exact kets require a perfect-square norm."""
    n2 = norm2(v)
    if n2 == 0:
        raise ValueError("cannot normalize the zero vector")
    if v.dtype == object:
        return v * ExactComplex(1 / rational_sqrt(n2))
    return v / np.sqrt(n2)


def is_normalized(v: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    n2 = norm2(v)
    if v.dtype == object:
        return n2 == 1
    return abs(n2 - 1.0) <= tol


def expectation(op: np.ndarray, psi: np.ndarray, tol: float = DEFAULT_TOL):
    """<psi|op|psi> for a normalized ket."""
    _require_square(op)
    if op.shape[0] != psi.shape[0]:
        raise ValueError(f"dimension mismatch: {op.shape} on {psi.shape}")
    if not is_normalized(psi, tol):
        raise ValueError(f"state is not normalized (|psi|^2 = {norm2(psi)})")
    return inner(psi, matvec(op, psi))


def variance(op: np.ndarray, psi: np.ndarray, tol: float = DEFAULT_TOL):
    """<op^2> - <op>^2; real for Hermitian op."""
    m = matvec(op, psi)
    if not is_normalized(psi, tol):
        raise ValueError(f"state is not normalized (|psi|^2 = {norm2(psi)})")
    ex2 = inner(psi, matvec(op, m))
    ex = inner(psi, m)
    out = ex2 - ex * ex
    if isinstance(out, ExactComplex):
        return out.re
    return float(np.real(out))


def covariance(a: np.ndarray, b: np.ndarray, psi: np.ndarray, tol: float = DEFAULT_TOL):
    """cov(a, b) = <ab> - <a><b>; complex in general."""
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    ab = expectation(matmul(a, b), psi, tol)
    return ab - expectation(a, psi, tol) * expectation(b, psi, tol)


def eigen_residual(op: np.ndarray, v: np.ndarray, lam) -> float:
    """||op v - lam v||_2.  Exactly 0.0 when the exact residual vanishes."""
    if op.shape[0] != v.shape[0]:
        raise ValueError(f"dimension mismatch: {op.shape} on {v.shape}")
    if v.dtype == object and not isinstance(lam, ExactComplex):
        lam = ExactComplex(lam)
    r = matvec(op, v) - lam * v
    return float(norm2(r)) ** 0.5


def max_abs(a: np.ndarray) -> float:
    """Largest entry magnitude, as a float (exact entries convert losslessly
    at zero, which is the only value the exact suites assert)."""
    if a.size == 0:
        return 0.0
    flat = a.ravel()
    if a.dtype == object:
        return max(float(x.abs2()) for x in flat) ** 0.5
    return float(np.max(np.abs(flat)))


def is_exactly_zero(a: np.ndarray) -> bool:
    flat = a.ravel()
    if a.dtype == object:
        return all(x == 0 for x in flat)
    return bool(np.all(flat == 0))


def gram(vectors) -> np.ndarray:
    """Matrix of pairwise inner products <v_i|v_j>."""
    n = len(vectors)
    if vectors[0].dtype == object:
        out = np.empty((n, n), dtype=object)
    else:
        out = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            out[i, j] = inner(vectors[i], vectors[j])
    return out


def identity_like(a: np.ndarray) -> np.ndarray:
    return backend_of(a).eye(a.shape[0])


def as_complex(a: np.ndarray) -> np.ndarray:
    """Convert either backend's array to complex128 (lossy for exact)."""
    if a.dtype == object:
        return np.array([[complex(x) for x in row] for row in a], dtype=complex) \
            if a.ndim == 2 else np.array([complex(x) for x in a], dtype=complex)
    return np.asarray(a, dtype=complex)


__all__ = [
    "vector", "matmul", "matvec", "kron", "commutator", "anticommutator",
    "dagger", "trace", "det", "inner", "norm2", "normalize", "is_normalized",
    "expectation", "variance", "covariance", "eigen_residual", "max_abs",
    "is_exactly_zero", "gram", "identity_like", "as_complex", "backend_of",
]
