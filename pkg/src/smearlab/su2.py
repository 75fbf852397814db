"""The 4-dim unitary representation generated by the smeared spin.

Sigma_i = 2 S_i / (hbar + beta) are traceless, Hermitian, unitary and
involutive, and satisfy the fundamental relation
Sigma_i Sigma_j = delta_ij I + i eps_ijk Sigma_k.  Group elements are
U = u0 I + i u . Sigma over the unit 3-sphere u0^2 + |u|^2 = 1, built
from the closed form only (never a series exponential).  Composition is
checked against a plain Hamilton quaternion product as an independent
oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Tuple, Union

import numpy as np

from .backends import DEFAULT_TOL, FLOAT
from .canonical import AXES, levi_civita, pauli
from .linalg import kron, max_abs


@dataclass(frozen=True)
class SigmaSet:
    """The three involutive generators at a given smearing ratio."""

    delta: object
    backend: object
    sigma: Dict[str, np.ndarray]

    @property
    def dim(self) -> int:
        return self.sigma["z"].shape[0]


def build_sigma(delta, backend=FLOAT) -> SigmaSet:
    """Sigma_i = (1+delta)^-1 (sigma_i (x) I + delta I (x) sigma_i
    + sqrt(delta) eps_ijk sigma_j (x) sigma_k), both orderings in the sum."""
    d = backend.real(delta)
    if d < 0:
        raise ValueError(f"delta must be nonnegative, got {delta}")
    sig = pauli(backend)
    eye2 = backend.eye(2)
    rd = backend.scalar(backend.sqrt(d))
    inv = backend.scalar(1) / backend.scalar(1 + d)
    out = {}
    for i in AXES:
        acc = kron(sig[i], eye2) + backend.scalar(d) * kron(eye2, sig[i])
        for j in AXES:
            for k in AXES:
                if j == i or k == i or j == k:
                    continue
                axis, sign = levi_civita(i, j)
                if axis != k:
                    continue
                acc = acc + backend.scalar(sign) * rd * kron(sig[j], sig[k])
        out[i] = inv * acc
    return SigmaSet(delta=delta, backend=backend, sigma=out)


def geometry_limit_sigma(backend=FLOAT) -> SigmaSet:
    """Generators in the matter-free substitution (hbar -> 0 with the
    geometry scale taking over): I (x) sigma_i.  Exposed as a dedicated
    constructor; it is not a continuous limit of build_sigma."""
    sig = pauli(backend)
    eye2 = backend.eye(2)
    return SigmaSet(delta=None, backend=backend,
                    sigma={i: kron(eye2, sig[i]) for i in AXES})


def fundamental_relation_check(sigma_set: SigmaSet) -> float:
    """Max residual of Sigma_i Sigma_j - delta_ij I - i eps_ijk Sigma_k."""
    bk = sigma_set.backend
    eye = bk.eye(sigma_set.dim)
    i_unit = bk.scalar(0, 1)
    worst = 0.0
    for i in AXES:
        for j in AXES:
            expected = bk.scalar(1 if i == j else 0) * eye
            k, sign = levi_civita(i, j)
            if sign:
                expected = expected + i_unit * bk.scalar(sign) * sigma_set.sigma[k]
            worst = max(worst, max_abs(sigma_set.sigma[i] @ sigma_set.sigma[j]
                                       - expected))
    return worst


@dataclass(frozen=True)
class QuaternionParams:
    """Group-element parameters (u0, u1, u2, u3) on the unit 3-sphere."""

    u0: float
    u1: float
    u2: float
    u3: float

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.u0, self.u1, self.u2, self.u3)

    def norm2(self) -> float:
        return self.u0 ** 2 + self.u1 ** 2 + self.u2 ** 2 + self.u3 ** 2

    def is_unit(self, tol: float = DEFAULT_TOL) -> bool:
        return abs(self.norm2() - 1.0) <= tol

    def conjugate(self) -> "QuaternionParams":
        return QuaternionParams(self.u0, -self.u1, -self.u2, -self.u3)


@dataclass(frozen=True)
class AxisAngle:
    """Rotation axis n (unit 3-vector) and angle theta in [0, 2 pi]."""

    n: Tuple[float, float, float]
    theta: float

    def to_quaternion(self) -> QuaternionParams:
        nx, ny, nz = self.n
        norm = math.sqrt(nx * nx + ny * ny + nz * nz)
        if abs(norm - 1.0) > 1e-10:
            raise ValueError(f"axis must be a unit vector, |n| = {norm}")
        half = self.theta / 2.0
        s = -math.sin(half)
        return QuaternionParams(math.cos(half), s * nx, s * ny, s * nz)


def quaternion_to_axis_angle(u: QuaternionParams) -> AxisAngle:
    """Inverse of AxisAngle.to_quaternion (theta in [0, 2 pi])."""
    u0 = min(1.0, max(-1.0, u.u0))
    theta = 2.0 * math.acos(u0)
    s = math.sin(theta / 2.0)
    if abs(s) < 1e-15:
        return AxisAngle(n=(0.0, 0.0, 1.0), theta=theta)
    return AxisAngle(n=(-u.u1 / s, -u.u2 / s, -u.u3 / s), theta=theta)


def group_element(params: Union[QuaternionParams, AxisAngle],
                  sigma_set: SigmaSet, tol: float = DEFAULT_TOL) -> np.ndarray:
    """U = u0 I + i (u1 Sigma_x + u2 Sigma_y + u3 Sigma_z).

    AxisAngle input goes through the closed form
    cos(theta/2) I - i sin(theta/2) n . Sigma.
    """
    if isinstance(params, AxisAngle):
        params = params.to_quaternion()
    if not params.is_unit(tol):
        raise ValueError(f"parameters not on the unit 3-sphere: "
                         f"|u|^2 = {params.norm2()}")
    bk = sigma_set.backend
    i_unit = bk.scalar(0, 1)
    u = dict(zip(AXES, (params.u1, params.u2, params.u3)))
    out = bk.scalar(params.u0) * bk.eye(sigma_set.dim)
    for i in AXES:
        out = out + i_unit * bk.scalar(u[i]) * sigma_set.sigma[i]
    return out


def hamilton_product(a: Tuple[float, float, float, float],
                     b: Tuple[float, float, float, float]
                     ) -> Tuple[float, float, float, float]:
    """Plain quaternion product (a0 + a1 i + a2 j + a3 k)(b0 + ...).

    Kept deliberately independent of the matrix representation; used as
    the oracle for group closure.
    """
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def compose(u: QuaternionParams, v: QuaternionParams) -> QuaternionParams:
    """Parameters of U(u) U(v).

    The representation composes as w0 = u0 v0 - u.v and
    w = u0 v + v0 u - u x v, which is the Hamilton product under the
    sign flip (u0, u) -> (u0, -u); route through the oracle so the two
    stay consistent by construction.
    """
    h = hamilton_product((u.u0, -u.u1, -u.u2, -u.u3),
                         (v.u0, -v.u1, -v.u2, -v.u3))
    return QuaternionParams(h[0], -h[1], -h[2], -h[3])


def closure_check(u: QuaternionParams, v: QuaternionParams,
                  sigma_set: SigmaSet) -> float:
    """Elementwise residual of U(u) U(v) - U(compose(u, v))."""
    lhs = group_element(u, sigma_set) @ group_element(v, sigma_set)
    rhs = group_element(compose(u, v), sigma_set)
    return max_abs(lhs - rhs)
