"""Canonical spin-1/2 quantum mechanics: the unsmeared reference theory.

Everything here is textbook material.  It serves as the beta -> 0 oracle
for the smeared constructions: every smeared operator must reduce, in
that limit, to a canonical operator embedded on the matter factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from .backends import FLOAT
from .linalg import kron, normalize, vector

AXES = ("x", "y", "z")

# Levi-Civita: eps[(i, j)] = (k, sign) for i != j
_EPS = {
    ("x", "y"): ("z", 1), ("y", "x"): ("z", -1),
    ("y", "z"): ("x", 1), ("z", "y"): ("x", -1),
    ("z", "x"): ("y", 1), ("x", "z"): ("y", -1),
}


def levi_civita(i: str, j: str) -> Tuple[str, int]:
    """Return (k, sign) with eps_ijk = sign, or sign 0 when i == j."""
    if i == j:
        return i, 0
    return _EPS[(i, j)]


def pauli(backend=FLOAT) -> Dict[str, np.ndarray]:
    """The three 2x2 Pauli matrices."""
    one = backend.scalar(1)
    i_ = backend.scalar(0, 1)
    zero = backend.scalar(0)
    return {
        "x": backend.array([[zero, one], [one, zero]]),
        "y": backend.array([[zero, -i_], [i_, zero]]),
        "z": backend.array([[one, zero], [zero, -one]]),
    }


@dataclass(frozen=True)
class CanonicalOperators:
    """One-particle spin-1/2 operators: s_i = (hbar/2) sigma_i."""

    hbar: object
    backend: object
    pauli: Dict[str, np.ndarray]
    s: Dict[str, np.ndarray]
    s2: np.ndarray
    s_plus: np.ndarray
    s_minus: np.ndarray


def build_canonical(hbar=1, backend=FLOAT) -> CanonicalOperators:
    if backend.real(hbar) <= 0:
        raise ValueError(f"hbar must be positive, got {hbar}")
    sig = pauli(backend)
    half = backend.scalar(backend.real(hbar) / 2)
    s = {i: half * sig[i] for i in AXES}
    s2 = s["x"] @ s["x"] + s["y"] @ s["y"] + s["z"] @ s["z"]
    i_ = backend.scalar(0, 1)
    return CanonicalOperators(
        hbar=hbar,
        backend=backend,
        pauli=sig,
        s=s,
        s2=s2,
        s_plus=s["x"] + i_ * s["y"],
        s_minus=s["x"] - i_ * s["y"],
    )


def canonical_eigenbasis(axis: str, hbar=1, backend=FLOAT) -> List[Tuple[np.ndarray, object]]:
    """The 2-dim spin eigenvectors with eigenvalues +/- hbar/2.

    Up state first.  x: (1,1)/sqrt2 and (1,-1)/sqrt2; y: (1,i)/sqrt2 and
    (1,-i)/sqrt2; z: (1,0) and (0,1).
    """
    if axis not in AXES:
        raise ValueError(f"axis must be one of {AXES}, got {axis!r}")
    half = backend.real(hbar) / 2
    one = backend.scalar(1)
    i_ = backend.scalar(0, 1)
    zero = backend.scalar(0)
    if axis == "z":
        raw = [[one, zero], [zero, one]]
    elif axis == "x":
        raw = [[one, one], [one, -one]]
    else:
        raw = [[one, i_], [one, -i_]]
    out = []
    for ket, sign in zip(raw, (1, -1)):
        v = vector(ket, backend)
        if backend is FLOAT:
            v = normalize(v)
        out.append((v, sign * half))
    return out


@dataclass(frozen=True)
class TwoParticleCanonical:
    """Two noninteracting spin-1/2 particles: totals, ladder operators,
    triplet/singlet states, and Bell states (z-axis by default)."""

    hbar: object
    backend: object
    s_a: Dict[str, np.ndarray]
    s_b: Dict[str, np.ndarray]
    s: Dict[str, np.ndarray]
    s2: np.ndarray
    s_plus: np.ndarray
    s_minus: np.ndarray
    triplet: List[np.ndarray] = field(default_factory=list)
    singlet: np.ndarray = None
    bell: Dict[str, np.ndarray] = field(default_factory=dict)


def canonical_bell_states(axis: str = "z", backend=FLOAT) -> Dict[str, np.ndarray]:
    """psi_pm = (|ud> +/- |du>)/sqrt2, phi_pm = (|uu> +/- |dd>)/sqrt2."""
    basis = canonical_eigenbasis(axis, 1, backend)
    up, down = basis[0][0], basis[1][0]
    uu = kron(up, up)
    ud = kron(up, down)
    du = kron(down, up)
    dd = kron(down, down)
    s2 = np.sqrt(2.0)
    return {
        "psi_plus": (ud + du) / s2,
        "psi_minus": (ud - du) / s2,
        "phi_plus": (uu + dd) / s2,
        "phi_minus": (uu - dd) / s2,
    }


def canonical_two_particle(hbar=1, backend=FLOAT) -> TwoParticleCanonical:
    one_p = build_canonical(hbar, backend)
    eye2 = backend.eye(2)
    s_a = {i: kron(one_p.s[i], eye2) for i in AXES}
    s_b = {i: kron(eye2, one_p.s[i]) for i in AXES}
    s = {i: s_a[i] + s_b[i] for i in AXES}
    s2 = sum(s[i] @ s[i] for i in AXES)
    i_ = backend.scalar(0, 1)
    s_plus = s["x"] + i_ * s["y"]
    s_minus = s["x"] - i_ * s["y"]

    up = vector([1, 0], backend)
    down = vector([0, 1], backend)
    uu, ud, du, dd = kron(up, up), kron(up, down), kron(down, up), kron(down, down)
    if backend is FLOAT:
        inv_s2 = 1 / np.sqrt(2.0)
        triplet = [uu, inv_s2 * (ud + du), dd]
        singlet = inv_s2 * (ud - du)
        bell = canonical_bell_states("z", backend)
    else:
        # exact triplet/singlet kept unnormalized (norm^2 = 2 for the mixed ones)
        triplet = [uu, ud + du, dd]
        singlet = ud - du
        bell = {}
    return TwoParticleCanonical(
        hbar=hbar, backend=backend, s_a=s_a, s_b=s_b, s=s, s2=s2,
        s_plus=s_plus, s_minus=s_minus, triplet=triplet, singlet=singlet,
        bell=bell,
    )
