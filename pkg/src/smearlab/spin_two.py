"""Two-particle smeared spin on the 16-dim product space.

Each particle carries the full 4-dim smeared operator; particle A acts on
the left tensor factor and B on the right.  The totals satisfy the same
rescaled algebra as the one-particle operators, with Casimir eigenvalues
2(hbar+beta)^2 (triplet-like families) and 0 (singlet-like family).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np

from .backends import FLOAT
from .canonical import AXES
from .linalg import commutator, kron, matvec, max_abs, norm2, vector
from .spin_one import SmearingParams, SpinOperatorSet, build_one_particle, eigenbasis


@dataclass(frozen=True)
class TwoParticleOperators:
    """Operator bundle for two smeared particles (all 16x16)."""

    params: SmearingParams
    backend: object
    one_particle: SpinOperatorSet
    S_A: Dict[str, np.ndarray]
    S_B: Dict[str, np.ndarray]
    S: Dict[str, np.ndarray]
    S2: np.ndarray
    Splus: np.ndarray
    Sminus: np.ndarray

    @property
    def sz_scale(self):
        """(hbar + beta): the magnitude of the extreme Sz eigenvalues."""
        return self.params.hbar + self.params.beta


def build_two_particle(params: SmearingParams, backend=FLOAT) -> TwoParticleOperators:
    one = build_one_particle(params, backend)
    eye4 = backend.eye(4)
    s_a = {i: kron(one.S[i], eye4) for i in AXES}
    s_b = {i: kron(eye4, one.S[i]) for i in AXES}
    total = {i: s_a[i] + s_b[i] for i in AXES}
    s2 = sum(total[i] @ total[i] for i in AXES)
    i_unit = backend.scalar(0, 1)
    return TwoParticleOperators(
        params=params,
        backend=backend,
        one_particle=one,
        S_A=s_a,
        S_B=s_b,
        S=total,
        S2=s2,
        Splus=total["x"] + i_unit * total["y"],
        Sminus=total["x"] - i_unit * total["y"],
    )


def verify_mutual_commutation(ops: TwoParticleOperators) -> float:
    """Max residual of [S_A_i, S_B_j] over all nine axis pairs."""
    return max(max_abs(commutator(ops.S_A[i], ops.S_B[j]))
               for i in AXES for j in AXES)


@dataclass(frozen=True)
class EigenFamily:
    """One of the 16 simultaneous eigenvectors of S_axis and S^2."""

    label: str           # Psi1a..d, Psi2a..d, Psi3a..d, Phia..d
    axis: str
    ket: np.ndarray
    sz_eigenvalue: object
    s2_eigenvalue: object
    normalized: bool


# (left prime flag, right prime flag) recipes for the product families and
# (first pair, second pair, sign) for the entangled ones; u/d mark the
# one-particle up/down kets, a trailing ' marks the geometry-entangled one
_PRODUCT = {
    "Psi1a": ("u", "u"), "Psi1b": ("u'", "u"), "Psi1c": ("u", "u'"), "Psi1d": ("u'", "u'"),
    "Psi2a": ("d", "d"), "Psi2b": ("d'", "d"), "Psi2c": ("d", "d'"), "Psi2d": ("d'", "d'"),
}
_MIXED = {
    # label: (first pair, second pair, sign of the second term)
    "Psi3a": (("u'", "d"), ("d", "u'"), 1),
    "Psi3b": (("u", "d'"), ("d'", "u"), 1),
    "Psi3c": (("u'", "d'"), ("d", "u"), 1),
    "Psi3d": (("d'", "u'"), ("u", "d"), 1),
    "Phia": (("u'", "d"), ("d", "u'"), -1),
    "Phib": (("u", "d'"), ("d'", "u"), -1),
    "Phic": (("u'", "d'"), ("d", "u"), -1),
    "Phid": (("d'", "u'"), ("u", "d"), -1),
}
FAMILY_LABELS = list(_PRODUCT) + list(_MIXED)


def _family_eigenvalues(label: str, scale):
    """(S_axis, S^2) eigenvalue pair for a family label; scale = hbar+beta."""
    if label.startswith("Psi1"):
        return scale, 2 * scale * scale
    if label.startswith("Psi2"):
        return -scale, 2 * scale * scale
    if label.startswith("Psi3"):
        return 0 * scale, 2 * scale * scale
    return 0 * scale, 0 * scale


def _axis_rotation(one: SpinOperatorSet, axis: str) -> np.ndarray:
    """Unitary U with U S_z U^dag = S_axis, in closed form
    cos(theta/2) I - i sin(theta/2) Sigma_n (float backend)."""
    half = np.sqrt(0.5)  # cos(pi/4) = sin(pi/4)
    if axis == "x":
        gen, sign = "y", -1.0
    else:
        gen, sign = "x", 1.0
    # Sigma_n = S_n / ((hbar+beta)/2) is the involutive unit generator
    sigma = np.asarray(one.S[gen], dtype=complex) \
        / float(np.real(complex(one.eigenvalue_scale)))
    return half * (np.eye(4, dtype=complex) + sign * 1j * sigma)


def eigenfamilies(ops: TwoParticleOperators, axis: str = "z",
                  normalized: bool = True) -> List[EigenFamily]:
    """All 16 closed-form eigenvectors of (S_axis, S^2).

    Eight are products of one-particle eigenkets; the other eight are
    two-term combinations.  The c/d members of the mixed families weight
    their double-unprimed term by (1-i sqrt(delta))^2/(1+delta), which has
    unit modulus, so every normalized ket here has norm exactly 1.

    For the z axis, ``normalized=False`` returns the rational-amplitude
    scaled kets (primed one-particle factors carry sqrt(1+delta), two-term
    combos drop the 1/sqrt(2)), for exact-backend verification.

    For x and y the zero-spin combinations are obtained by rotating the z
    families with the closed-form group element cos(pi/4) I -/+
    i sin(pi/4) Sigma; substituting the x/y one-particle kets into the
    z-axis pattern does not give S^2 eigenvectors, because the x/y
    primed/unprimed partners are not orthogonal.  This path is float-only
    (the rotation amplitudes are irrational).
    """
    if axis not in AXES:
        raise ValueError(f"axis must be one of {AXES}, got {axis!r}")
    if axis != "z" and not normalized:
        raise ValueError("rational raw closed forms exist only for the z axis")
    bk = ops.backend
    basis = eigenbasis(ops.one_particle, axis, normalized=normalized)
    kets = {"u": basis.up, "u'": basis.up_prime,
            "d": basis.down, "d'": basis.down_prime}
    scale = ops.sz_scale
    mixed: Dict[str, np.ndarray] = {}
    if axis == "z":
        d = bk.real(ops.params.delta)
        rd = bk.sqrt(d)
        if normalized:
            inv_s2 = bk.scalar(1) / bk.scalar(bk.sqrt(bk.real(2)))
            # (1 - i sqrt(delta))^2 / (1+delta), unit modulus
            q = bk.scalar(1 - d, -2 * rd) / bk.scalar(1 + d)
        else:
            inv_s2 = bk.scalar(1)
            q = bk.scalar(1 - d, -2 * rd)
        for label, ((a1, b1), (a2, b2), sign) in _MIXED.items():
            second = kron(kets[a2], kets[b2])
            # the c/d members pair a double-primed product with a
            # double-unprimed one and carry the extra phase factor q
            if label[-1] in "cd":
                second = q * second
            mixed[label] = inv_s2 * (kron(kets[a1], kets[b1])
                                     + bk.scalar(sign) * second)
    else:
        u1 = _axis_rotation(ops.one_particle, axis)
        u2 = kron(u1, u1)
        for fam in eigenfamilies(ops, "z", normalized=True):
            if fam.label in _MIXED:
                mixed[fam.label] = matvec(u2, np.asarray(fam.ket, dtype=complex))
    out = []
    for label in FAMILY_LABELS:
        if label in _PRODUCT:
            a, b = _PRODUCT[label]
            ket = kron(kets[a], kets[b])
        else:
            ket = mixed[label]
        sz, s2 = _family_eigenvalues(label, scale)
        out.append(EigenFamily(label=label, axis=axis, ket=ket,
                               sz_eigenvalue=sz, s2_eigenvalue=s2,
                               normalized=normalized))
    return out


@dataclass(frozen=True)
class PhysicalState:
    """Normalized superposition within one degenerate (S_axis, S^2) family."""

    family: str          # Psi1, Psi2, Psi3, Phi
    axis: str
    coefficients: tuple
    ket: np.ndarray
    sz_eigenvalue: object
    s2_eigenvalue: object


def physical_state(ops: TwoParticleOperators, family: str,
                   coefficients: Sequence[complex],
                   axis: str = "z") -> PhysicalState:
    """Combine the four a..d members of a family with unit-norm coefficients."""
    if family not in ("Psi1", "Psi2", "Psi3", "Phi"):
        raise ValueError(f"unknown family {family!r}")
    coeffs = [complex(c) for c in coefficients]
    if len(coeffs) != 4:
        raise ValueError("expected 4 coefficients (members a..d)")
    if abs(sum(abs(c) ** 2 for c in coeffs) - 1.0) > 1e-10:
        raise ValueError("coefficients must satisfy sum |alpha|^2 = 1")
    members = [f for f in eigenfamilies(ops, axis, normalized=True)
               if f.label.startswith(family) and f.label[len(family):] in "abcd"]
    ket = sum(c * f.ket for c, f in zip(coeffs, members))
    return PhysicalState(
        family=family, axis=axis, coefficients=tuple(coeffs), ket=ket,
        sz_eigenvalue=members[0].sz_eigenvalue,
        s2_eigenvalue=members[0].s2_eigenvalue,
    )


# the eight printed ladder flips: operator, input pair, output terms.
# c+ marks hbar + i sqrt(hbar beta), c- its conjugate; the overall
# sqrt(1+delta) of the printed identities is absorbed into the raw kets.
_FLIPS = [
    ("minus", ("u", "u"), [("c+", ("d'", "u")), ("c+", ("u", "d'"))]),
    ("minus", ("u'", "u"), [("c-", ("d", "u")), ("c+", ("u'", "d'"))]),
    ("minus", ("u", "u'"), [("c+", ("d'", "u'")), ("c-", ("u", "d"))]),
    ("minus", ("u'", "u'"), [("c-", ("d", "u'")), ("c-", ("u'", "d"))]),
    ("plus", ("d", "d"), [("c+", ("u'", "d")), ("c+", ("d", "u'"))]),
    ("plus", ("d'", "d"), [("c-", ("u", "d")), ("c+", ("d'", "u'"))]),
    ("plus", ("d", "d'"), [("c+", ("u'", "d'")), ("c-", ("d", "u"))]),
    ("plus", ("d'", "d'"), [("c-", ("u", "d'")), ("c-", ("d'", "u"))]),
]


def two_particle_flips(ops: TwoParticleOperators) -> Dict[str, float]:
    """Residuals of the eight ladder flip identities plus the annihilation
    facts (S+ kills the all-up and singlet-type families, S- the all-down
    and singlet-type families).

    Verified on the rational raw kets: each raw one-particle primed ket
    absorbs one sqrt(1+delta), so a term whose prime count drops by one
    relative to the input picks up a factor (1+delta) and every
    coefficient stays inside the rational-complex field.
    """
    bk = ops.backend
    h = bk.real(ops.params.hbar)
    b = bk.real(ops.params.beta)
    d = bk.real(ops.params.delta)
    basis = eigenbasis(ops.one_particle, "z", normalized=False)
    kets = {"u": basis.up, "u'": basis.up_prime,
            "d": basis.down, "d'": basis.down_prime}
    coeff = {"c+": bk.scalar(h, bk.sqrt(h * b)),
             "c-": bk.scalar(h, -bk.sqrt(h * b))}
    one_plus_d = bk.scalar(1 + d)

    def primes(pair):
        return sum(1 for name in pair if name.endswith("'"))

    res: Dict[str, float] = {}
    for op_name, inp, terms in _FLIPS:
        op = ops.Sminus if op_name == "minus" else ops.Splus
        lhs = matvec(op, kron(kets[inp[0]], kets[inp[1]]))
        rhs = bk.zeros(16)
        for cname, pair in terms:
            term = coeff[cname] * kron(kets[pair[0]], kets[pair[1]])
            if primes(inp) > primes(pair):
                term = one_plus_d * term
            rhs = rhs + term
        sym = "S-" if op_name == "minus" else "S+"
        res[f"{sym} {inp[0]}(x){inp[1]}"] = max_abs(lhs - rhs)

    fams = eigenfamilies(ops, "z", normalized=(bk is FLOAT))
    for f in fams:
        if f.label.startswith("Psi1") or f.label.startswith("Phi"):
            res[f"S+ {f.label} = 0"] = max_abs(matvec(ops.Splus, f.ket))
        if f.label.startswith("Psi2") or f.label.startswith("Phi"):
            res[f"S- {f.label} = 0"] = max_abs(matvec(ops.Sminus, f.ket))
    return res


def bell_states(ops: TwoParticleOperators, axis: str = "z",
                coefficients: Optional[Dict[str, Sequence[complex]]] = None
                ) -> Dict[str, np.ndarray]:
    """The four maximally-correlated states for measurements along ``axis``.

    psi_plus is the (S_axis=0, S^2=2(hbar+beta)^2) physical state,
    psi_minus the (0, 0) one, and phi_pm = (Psi1 +/- Psi2)/sqrt(2).  The
    degenerate-family freedom is fixed by per-family coefficient vectors;
    the default picks the 'a' member of each family.
    """
    if coefficients is None:
        coefficients = {}
    default = (1.0, 0.0, 0.0, 0.0)
    states = {fam: physical_state(ops, fam, coefficients.get(fam, default), axis)
              for fam in ("Psi1", "Psi2", "Psi3", "Phi")}
    inv_s2 = 1 / np.sqrt(2.0)
    return {
        "psi_plus": states["Psi3"].ket,
        "psi_minus": states["Phi"].ket,
        "phi_plus": inv_s2 * (states["Psi1"].ket + states["Psi2"].ket),
        "phi_minus": inv_s2 * (states["Psi1"].ket - states["Psi2"].ket),
    }
