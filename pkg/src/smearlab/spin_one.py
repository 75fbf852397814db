"""One-particle spin operators on the 4-dim matter (x) geometry space.

The spin operator along each axis splits into three subcomponents: a
matter part (hbar/2) sigma_i (x) I, a geometry part (beta/2) I (x) sigma_i,
and an interaction part (sqrt(hbar*beta)/2) eps_ijk sigma_j (x) sigma_k
summed over both orderings.  The total carries the rescaled algebra
[S_i, S_j] = i (hbar + beta) eps_ijk S_k and a Casimir
S^2 = 3 (hbar + beta)^2 / 4 * I.

Composite basis index convention: 2 * (matter bit) + (geometry bit),
with |up> = (1, 0) on each factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

import numpy as np

from .backends import EXACT, FLOAT
from .canonical import AXES, levi_civita, pauli
from .linalg import (
    anticommutator,
    commutator,
    gram,
    inner,
    kron,
    matvec,
    max_abs,
    norm2,
    normalize,
    variance,
    vector,
)


@dataclass(frozen=True)
class SmearingParams:
    """Action constants of the smeared background.

    ``delta = beta / hbar`` is the dimensionless smearing ratio; the
    physical headline value is about 1e-61, but any delta >= 0 is valid
    input (exact verification additionally needs sqrt(delta) rational).
    """

    hbar: object = 1
    beta: object = 0

    def __post_init__(self):
        if not self.hbar > 0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")
        if self.beta < 0:
            raise ValueError(f"beta must be nonnegative, got {self.beta}")

    @property
    def delta(self):
        return self.beta / self.hbar

    @classmethod
    def from_delta(cls, delta, hbar=1) -> "SmearingParams":
        return cls(hbar=hbar, beta=hbar * delta)

    @classmethod
    def exact_from_delta(cls, delta) -> "SmearingParams":
        """Exact-backend parameters with hbar = 1 and rational delta."""
        return cls(hbar=Fraction(1), beta=Fraction(delta))


@dataclass(frozen=True)
class SpinOperatorSet:
    """The operator bundle for one smeared particle (all 4x4)."""

    params: SmearingParams
    backend: object
    S: Dict[str, np.ndarray]
    S2: np.ndarray
    Splus: np.ndarray
    Sminus: np.ndarray
    sub_matter: Dict[str, np.ndarray]
    sub_geometry: Dict[str, np.ndarray]
    sub_interaction: Dict[str, np.ndarray]

    @property
    def dim(self) -> int:
        return self.S["z"].shape[0]

    @property
    def eigenvalue_scale(self):
        """(hbar + beta) / 2: the magnitude of every S_i eigenvalue."""
        return (self.params.hbar + self.params.beta) / 2


def build_one_particle(params: SmearingParams, backend=FLOAT) -> SpinOperatorSet:
    hbar = backend.real(params.hbar)
    beta = backend.real(params.beta)
    sig = pauli(backend)
    eye2 = backend.eye(2)

    half_h = backend.scalar(hbar / 2)
    half_b = backend.scalar(beta / 2)
    half_hb = backend.scalar(backend.sqrt(hbar * beta) / 2)

    matter = {i: half_h * kron(sig[i], eye2) for i in AXES}
    geometry = {i: half_b * kron(eye2, sig[i]) for i in AXES}
    interaction = {}
    for i in AXES:
        acc = backend.zeros((4, 4))
        for j in AXES:
            for k in AXES:
                if j == i or k == i or j == k:
                    continue
                # only terms with eps_ijk != 0 survive, i.e. {j,k} = AXES \ {i}
                axis, sign = levi_civita(i, j)
                if axis != k:
                    continue
                acc = acc + backend.scalar(sign) * kron(sig[j], sig[k])
        interaction[i] = half_hb * acc
    total = {i: matter[i] + geometry[i] + interaction[i] for i in AXES}
    s2_op = sum(total[i] @ total[i] for i in AXES)
    i_unit = backend.scalar(0, 1)
    return SpinOperatorSet(
        params=params,
        backend=backend,
        S=total,
        S2=s2_op,
        Splus=total["x"] + i_unit * total["y"],
        Sminus=total["x"] - i_unit * total["y"],
        sub_matter=matter,
        sub_geometry=geometry,
        sub_interaction=interaction,
    )


def explicit_matrices(params: SmearingParams, backend=FLOAT) -> Dict[str, np.ndarray]:
    """Golden fixtures: the three 4x4 spin matrices written out entry by
    entry (independent of the tensor-product construction above)."""
    h = backend.real(params.hbar)
    b = backend.real(params.beta)
    rhb = backend.sqrt(h * b)
    s = backend.scalar
    z = s(0)
    sx = backend.array([
        [z, s(b / 2, rhb / 2), s(h / 2, -rhb / 2), z],
        [s(b / 2, -rhb / 2), z, z, s(h / 2, rhb / 2)],
        [s(h / 2, rhb / 2), z, z, s(b / 2, -rhb / 2)],
        [z, s(h / 2, -rhb / 2), s(b / 2, rhb / 2), z],
    ])
    sy = backend.array([
        [z, s(rhb / 2, -b / 2), s(-rhb / 2, -h / 2), z],
        [s(rhb / 2, b / 2), z, z, s(rhb / 2, -h / 2)],
        [s(-rhb / 2, h / 2), z, z, s(-rhb / 2, -b / 2)],
        [z, s(rhb / 2, h / 2), s(-rhb / 2, b / 2), z],
    ])
    sz = backend.array([
        [s((h + b) / 2), z, z, z],
        [z, s((h - b) / 2), s(0, rhb), z],
        [z, s(0, -rhb), s(-(h - b) / 2), z],
        [z, z, z, s(-(h + b) / 2)],
    ])
    return {"x": sx, "y": sy, "z": sz}


def explicit_ladder(params: SmearingParams, backend=FLOAT) -> Dict[str, np.ndarray]:
    """Golden fixtures for the raising/lowering operators."""
    h = backend.real(params.hbar)
    b = backend.real(params.beta)
    rhb = backend.sqrt(h * b)
    s = backend.scalar
    z = s(0)
    plus = backend.array([
        [z, s(b, rhb), s(h, -rhb), z],
        [z, z, z, s(h, rhb)],
        [z, z, z, s(b, -rhb)],
        [z, z, z, z],
    ])
    minus = backend.array([
        [z, z, z, z],
        [s(b, -rhb), z, z, z],
        [s(h, rhb), z, z, z],
        [z, s(h, -rhb), s(b, rhb), z],
    ])
    return {"plus": plus, "minus": minus}


# ---------------------------------------------------------------------------
# subalgebra verification


def verify_subalgebras(ops: SpinOperatorSet) -> Dict[str, float]:
    """Max elementwise residual for every commutation/anticommutation
    identity the subcomponents and totals must satisfy."""
    bk = ops.backend
    p = ops.params
    h = bk.real(p.hbar)
    b = bk.real(p.beta)
    i_unit = bk.scalar(0, 1)
    eye4 = bk.eye(4)
    M, G, X = ops.sub_matter, ops.sub_geometry, ops.sub_interaction
    S = ops.S
    res: Dict[str, float] = {}

    def put(label: str, arr) -> None:
        res[label] = max(res.get(label, 0.0), max_abs(arr))

    for i in AXES:
        for j in AXES:
            k, sign = levi_civita(i, j)
            eps = bk.scalar(sign)
            zero4 = bk.zeros((4, 4))
            eps_m = (i_unit * bk.scalar(h) * eps * M[k]) if sign else zero4
            eps_g = (i_unit * bk.scalar(b) * eps * G[k]) if sign else zero4
            eps_x = (i_unit * eps * X[k]) if sign else zero4

            put("[M_i,M_j] = i hbar eps M_k", commutator(M[i], M[j]) - eps_m)
            put("[G_i,G_j] = i beta eps G_k", commutator(G[i], G[j]) - eps_g)
            put("[M_i,G_j] = 0", commutator(M[i], G[j]))
            put("[M_i,X_j] - [M_j,X_i] = i hbar eps X_k",
                commutator(M[i], X[j]) - commutator(M[j], X[i])
                - bk.scalar(h) * eps_x)
            put("[G_i,X_j] - [G_j,X_i] = i beta eps X_k",
                commutator(G[i], X[j]) - commutator(G[j], X[i])
                - bk.scalar(b) * eps_x)
            put("[X_i,X_j] = i beta eps M_k + i hbar eps G_k",
                commutator(X[i], X[j])
                - (i_unit * bk.scalar(b) * eps * M[k] + i_unit * bk.scalar(h) * eps * G[k]
                   if sign else zero4))

            delta_ij = bk.scalar(1 if i == j else 0)
            put("{M_i,M_j} = (hbar^2/2) delta I",
                anticommutator(M[i], M[j]) - bk.scalar(h * h / 2) * delta_ij * eye4)
            put("{G_i,G_j} = (beta^2/2) delta I",
                anticommutator(G[i], G[j]) - bk.scalar(b * b / 2) * delta_ij * eye4)
            put("{M_i,X_j} + {M_j,X_i} = 0",
                anticommutator(M[i], X[j]) + anticommutator(M[j], X[i]))
            put("{G_i,X_j} + {G_j,X_i} = 0",
                anticommutator(G[i], X[j]) + anticommutator(G[j], X[i]))
            put("{X_i,X_j} = hbar beta delta I - {M_i,G_j} - {M_j,G_i}",
                anticommutator(X[i], X[j])
                - (bk.scalar(h * b) * delta_ij * eye4
                   - anticommutator(M[i], G[j]) - anticommutator(M[j], G[i])))

            put("[S_i,S_j] = i (hbar+beta) eps S_k",
                commutator(S[i], S[j])
                - (i_unit * bk.scalar(h + b) * eps * S[k] if sign else zero4))
            put("{S_i,S_j} = ((hbar+beta)^2/2) delta I",
                anticommutator(S[i], S[j])
                - bk.scalar((h + b) * (h + b) / 2) * delta_ij * eye4)
        put("[S_i,S^2] = 0", commutator(S[i], ops.S2))

    scale = bk.scalar((h + b) * (h + b) * 3 / 4)
    put("S^2 = 3 (hbar+beta)^2 / 4 I", ops.S2 - scale * eye4)
    put("[S_z,S_+] = +(hbar+beta) S_+",
        commutator(S["z"], ops.Splus) - bk.scalar(h + b) * ops.Splus)
    put("[S_z,S_-] = -(hbar+beta) S_-",
        commutator(S["z"], ops.Sminus) + bk.scalar(h + b) * ops.Sminus)
    put("[S_+,S_-] = 2 (hbar+beta) S_z",
        commutator(ops.Splus, ops.Sminus) - bk.scalar(2 * (h + b)) * S["z"])
    return res


# ---------------------------------------------------------------------------
# eigenstate families


@dataclass(frozen=True)
class QubitBasis:
    """The four eigenvectors of one spin axis: the unprimed pair is the
    product-state ('canonical') family, the primed pair is entangled with
    the geometry factor.  Up states carry +(hbar+beta)/2, down states the
    negative."""

    axis: str
    up: np.ndarray
    down: np.ndarray
    up_prime: np.ndarray
    down_prime: np.ndarray
    eigenvalue_up: object
    eigenvalue_down: object
    normalized: bool

    def kets(self) -> List[np.ndarray]:
        return [self.up, self.up_prime, self.down, self.down_prime]

    def eigenvalues(self) -> List[object]:
        return [self.eigenvalue_up, self.eigenvalue_up,
                self.eigenvalue_down, self.eigenvalue_down]


def eigenbasis(ops: SpinOperatorSet, axis: str, normalized: bool = True) -> QubitBasis:
    """Closed-form eigenvectors of S_axis.

    With ``normalized=False`` the kets are returned scaled to clear the
    irrational normalizers (sqrt(1+delta), sqrt(2)...), which keeps every
    amplitude inside the rational-complex field of the exact backend.
    """
    if axis not in AXES:
        raise ValueError(f"axis must be one of {AXES}, got {axis!r}")
    bk = ops.backend
    d = bk.real(ops.params.delta)
    rd = bk.sqrt(d)
    s = bk.scalar
    z = s(0)
    one = s(1)
    ird = s(0, 1) * s(rd)  # i sqrt(delta)

    if axis == "z":
        raw = {
            "up": [one, z, z, z],
            "up_prime": [z, one, -ird, z],
            "down_prime": [z, -ird, one, z],
            "down": [z, z, z, one],
        }
    elif axis == "y":
        raw = {
            "up": [-one + ird, -s(rd), -s(0, 1), z],
            "down": [one - ird, -s(rd), -s(0, 1), z],
            "up_prime": [-ird, -s(0, 1) + s(rd), z, one],
            "down_prime": [-ird, s(0, 1) - s(rd), z, one],
        }
    else:  # x
        raw = {
            "up": [one - ird, -ird, one, z],
            "down": [one - ird, ird, -one, z],
            "up_prime": [-ird, -one - ird, z, -one],
            "down_prime": [-ird, one + ird, z, -one],
        }
    kets = {name: vector(vals, bk) for name, vals in raw.items()}
    if normalized:
        kets = {name: normalize(v) for name, v in kets.items()}
    lam = ops.eigenvalue_scale
    return QubitBasis(
        axis=axis,
        up=kets["up"],
        down=kets["down"],
        up_prime=kets["up_prime"],
        down_prime=kets["down_prime"],
        eigenvalue_up=lam,
        eigenvalue_down=-lam,
        normalized=normalized,
    )


def braket_table(basis: QubitBasis) -> np.ndarray:
    """4x4 Gram matrix of the basis in order (up, up', down, down').

    The z-basis is orthonormal (table = identity).  For x and y the
    primed/unprimed partners with the same sign overlap by
    (delta -/+ i sqrt(delta))/(1+delta); only opposite-sign pairs and
    same-name pairs are orthonormal there.
    """
    return gram(basis.kets())


# ---------------------------------------------------------------------------
# projective measurement


@dataclass(frozen=True)
class MeasurementRecord:
    axis: str
    outcome: float
    probability: float
    post_state: Optional[np.ndarray]
    subspace_dim: int = 2


def _eigenspace_projector(*kets) -> np.ndarray:
    """Orthogonal projector onto span(kets).  The spanning kets need not
    be mutually orthogonal (the x/y degenerate pairs are not), so run a
    Gram-Schmidt pass first."""
    ortho = []
    proj = np.zeros((kets[0].shape[0],) * 2, dtype=complex)
    for v in kets:
        w = np.asarray(v, dtype=complex).copy()
        for u in ortho:
            w -= np.vdot(u, w) * u
        w /= np.linalg.norm(w)
        ortho.append(w)
        proj += np.outer(w, np.conjugate(w))
    return proj


def _projectors(ops: SpinOperatorSet, axis: str):
    basis = eigenbasis(ops, axis, normalized=True)
    up_p = _eigenspace_projector(basis.up, basis.up_prime)
    down_p = _eigenspace_projector(basis.down, basis.down_prime)
    return [(float(np.real(basis.eigenvalue_up)), up_p),
            (float(np.real(basis.eigenvalue_down)), down_p)]


def measurement_outcomes(state: np.ndarray, ops: SpinOperatorSet,
                         axis: str) -> List[MeasurementRecord]:
    """Enumerate both outcomes with Lueders post-states.

    The post-state is the normalized projection onto the full 2-dim
    degenerate eigenspace; a zero-probability outcome carries
    ``post_state=None``.
    """
    n2 = norm2(state)
    if abs(n2 - 1.0) > 1e-10:
        raise ValueError(f"state is not normalized (|psi|^2 = {n2})")
    records = []
    for eigval, proj in _projectors(ops, axis):
        projected = matvec(proj, state)
        p = float(norm2(projected))
        post = projected / np.sqrt(p) if p > 1e-30 else None
        records.append(MeasurementRecord(
            axis=axis, outcome=eigval, probability=p, post_state=post))
    return records


def measure(state: np.ndarray, ops: SpinOperatorSet, axis: str,
            rng_seed: Optional[int] = None, rng=None) -> MeasurementRecord:
    """Sample one projective measurement (PCG64 generator, seedable)."""
    if rng is None:
        rng = np.random.default_rng(rng_seed)
    records = measurement_outcomes(state, ops, axis)
    r = rng.random()
    return records[0] if r < records[0].probability else records[1]


def conditional_probability(ops: SpinOperatorSet, first_axis: str, first_sign: int,
                            second_axis: str, second_sign: int,
                            alpha=1.0, alpha_prime=0.0) -> float:
    """P(second outcome | first outcome), where the post-first state is the
    admissible mixture alpha |s1> + alpha' |s1'> within the degenerate
    eigenspace of the first measurement.

    Identical axes are legal (the answer is 1 or 0 by repeatability).
    """
    if abs(abs(alpha) ** 2 + abs(alpha_prime) ** 2 - 1.0) > 1e-10:
        raise ValueError("mixing coefficients must satisfy |a|^2 + |a'|^2 = 1")
    basis = eigenbasis(ops, first_axis, normalized=True)
    if first_sign > 0:
        state = alpha * basis.up + alpha_prime * basis.up_prime
    else:
        state = alpha * basis.down + alpha_prime * basis.down_prime
    # for x/y the degenerate partners are not orthogonal, so the mixture
    # needs an explicit renormalization
    state = state / np.linalg.norm(state)
    records = measurement_outcomes(state, ops, second_axis)
    rec = records[0] if second_sign > 0 else records[1]
    return rec.probability


# ---------------------------------------------------------------------------
# spin flips


def spin_flip_check(ops: SpinOperatorSet) -> Dict[str, float]:
    """Residuals of the ladder-operator flip identities on the z-basis.

    Stated on unnormalized kets so the exact backend sees only rational
    amplitudes: with u, u', d, d' the raw z-eigenvectors (primed ones
    scaled by sqrt(1+delta)),

        S- u  = (hbar + i sqrt(hbar beta)) d'
        S- u' = (1+delta) (hbar - i sqrt(hbar beta)) d
        S+ d  = (hbar + i sqrt(hbar beta)) u'
        S+ d' = (1+delta) (hbar - i sqrt(hbar beta)) u

    and S+ annihilates {u, u'} while S- annihilates {d, d'}.
    """
    bk = ops.backend
    h = bk.real(ops.params.hbar)
    b = bk.real(ops.params.beta)
    d = bk.real(ops.params.delta)
    basis = eigenbasis(ops, "z", normalized=False)
    u, up, dn, dp = basis.up, basis.up_prime, basis.down, basis.down_prime
    c_plus = bk.scalar(h, bk.sqrt(h * b))    # hbar + i sqrt(hbar beta)
    c_minus = bk.scalar(h, -bk.sqrt(h * b))  # hbar - i sqrt(hbar beta)
    scale = bk.scalar(1 + d)
    res = {
        "S- up = c+ down'": max_abs(matvec(ops.Sminus, u) - c_plus * dp),
        "S- up' = (1+delta) c- down": max_abs(
            matvec(ops.Sminus, up) - scale * c_minus * dn),
        "S+ down = c+ up'": max_abs(matvec(ops.Splus, dn) - c_plus * up),
        "S+ down' = (1+delta) c- up": max_abs(
            matvec(ops.Splus, dp) - scale * c_minus * u),
        "S+ up = 0": max_abs(matvec(ops.Splus, u)),
        "S+ up' = 0": max_abs(matvec(ops.Splus, up)),
        "S- down = 0": max_abs(matvec(ops.Sminus, dn)),
        "S- down' = 0": max_abs(matvec(ops.Sminus, dp)),
    }
    return res


# ---------------------------------------------------------------------------
# uncertainty relations


@dataclass(frozen=True)
class AxisUncertainty:
    """Variance decomposition of one spin axis for a given state."""

    axis: str
    direct_variance: float
    var_matter: float
    var_geometry: float
    var_interaction: float
    cov_matter_interaction: float      # cov(M,X) + cov(X,M)
    cov_geometry_interaction: float    # cov(G,X) + cov(X,G)
    cov_matter_geometry: float         # cov(M,G) + cov(G,M); absent from the
                                       # seven-term decomposition
    @property
    def seven_term_sum(self) -> float:
        return (self.var_matter + self.var_geometry + self.var_interaction
                + self.cov_matter_interaction + self.cov_geometry_interaction)

    @property
    def full_sum(self) -> float:
        return self.seven_term_sum + self.cov_matter_geometry

    @property
    def delta_s(self) -> float:
        return max(self.direct_variance, 0.0) ** 0.5


@dataclass(frozen=True)
class RobertsonCheck:
    axis_pair: tuple
    product: float
    bound: float

    @property
    def satisfied(self) -> bool:
        return self.product >= self.bound - 1e-12


@dataclass(frozen=True)
class UncertaintyReport:
    per_axis: Dict[str, AxisUncertainty]
    robertson: List[RobertsonCheck] = field(default_factory=list)

    @property
    def max_decomposition_residual(self) -> float:
        return max(abs(a.direct_variance - a.full_sum)
                   for a in self.per_axis.values())

    @property
    def max_cross_covariance(self) -> float:
        """Largest matter-geometry cross term (the contribution missing
        from the seven-term decomposition); informational."""
        return max(abs(a.cov_matter_geometry) for a in self.per_axis.values())

    @property
    def all_bounds_satisfied(self) -> bool:
        return all(c.satisfied for c in self.robertson)


def gur_report(state: np.ndarray, ops: SpinOperatorSet) -> UncertaintyReport:
    """Per-axis uncertainty decomposition plus the Robertson bounds.

    Float backend only (variances of generic normalized states are
    irrational in general).
    """
    n2 = norm2(state)
    if abs(n2 - 1.0) > 1e-10:
        raise ValueError(f"state is not normalized (|psi|^2 = {n2})")
    psi = np.asarray(state, dtype=complex)
    per_axis = {}
    means = {}
    for i in AXES:
        mv = {
            "S": ops.S[i] @ psi,
            "M": ops.sub_matter[i] @ psi,
            "G": ops.sub_geometry[i] @ psi,
            "X": ops.sub_interaction[i] @ psi,
        }
        ex = {k: np.vdot(psi, v) for k, v in mv.items()}
        means[i] = float(np.real(ex["S"]))

        def var(k):
            # Hermitian operators: <A^2> = ||A psi||^2
            return float(np.real(np.vdot(mv[k], mv[k]) - ex[k] * ex[k]))

        def cov_sym(a, b):
            # cov(A,B) + cov(B,A) = <AB> + <BA> - 2<A><B>, real for Hermitian
            return float(np.real(np.vdot(mv[a], mv[b]) + np.vdot(mv[b], mv[a])
                                 - 2 * ex[a] * ex[b]))

        per_axis[i] = AxisUncertainty(
            axis=i,
            direct_variance=var("S"),
            var_matter=var("M"),
            var_geometry=var("G"),
            var_interaction=var("X"),
            cov_matter_interaction=cov_sym("M", "X"),
            cov_geometry_interaction=cov_sym("G", "X"),
            cov_matter_geometry=cov_sym("M", "G"),
        )
    scale = float(np.real(complex(ops.eigenvalue_scale)))
    robertson = []
    for i in AXES:
        for j in AXES:
            k, sign = levi_civita(i, j)
            if sign == 0:
                continue
            robertson.append(RobertsonCheck(
                axis_pair=(i, j),
                product=per_axis[i].delta_s * per_axis[j].delta_s,
                bound=scale * abs(means[k]),
            ))
    return UncertaintyReport(per_axis=per_axis, robertson=robertson)
