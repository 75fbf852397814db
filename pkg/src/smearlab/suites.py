"""Named verification suites producing structured pass/fail reports.

Each check records the mathematical identity it exercises, the measured
max residual, and the tolerance it was held to.  The float backend uses
the configured absolute tolerance; the exact backend demands residual 0.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

import numpy as np

from .backends import DEFAULT_TOL, EXACT, FLOAT
from .linalg import eigen_residual, gram, identity_like, max_abs, norm2
from .spin_one import (
    SmearingParams,
    braket_table,
    build_one_particle,
    conditional_probability,
    eigenbasis,
    explicit_ladder,
    explicit_matrices,
    spin_flip_check,
    verify_subalgebras,
)
from .spin_two import (
    build_two_particle,
    eigenfamilies,
    two_particle_flips,
    verify_mutual_commutation,
)
from .su2 import (
    QuaternionParams,
    build_sigma,
    closure_check,
    fundamental_relation_check,
    group_element,
)


@dataclass(frozen=True)
class CheckResult:
    label: str
    identity: str        # the relation being verified, in plain notation
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


@dataclass
class SuiteReport:
    suite: str
    backend: str
    delta: str
    checks: List[CheckResult] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def overall_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.checks), default=0.0)

    def to_dict(self) -> dict:
        # wall_time stays off the serialized form so that identical
        # seed + config runs produce byte-identical files
        return {
            "suite": self.suite,
            "backend": self.backend,
            "delta": self.delta,
            "overall_pass": self.overall_pass,
            "checks": [
                {
                    "label": c.label,
                    "identity": c.identity,
                    "max_residual": c.residual,
                    "tolerance": c.tolerance,
                    "pass": c.passed,
                }
                for c in self.checks
            ],
        }


def _params_for(delta, backend) -> SmearingParams:
    if backend is EXACT:
        return SmearingParams.exact_from_delta(Fraction(delta))
    return SmearingParams.from_delta(float(delta))


def _delta_repr(delta) -> str:
    return str(Fraction(delta)) if isinstance(delta, (Fraction, int)) else repr(float(delta))


def run_fixture_suite(delta, backend=FLOAT, tol: float = DEFAULT_TOL) -> SuiteReport:
    """Constructed operators against the entrywise golden matrices."""
    t0 = time.perf_counter()
    tol = 0.0 if backend is EXACT else tol
    params = _params_for(delta, backend)
    ops = build_one_particle(params, backend)
    fix = explicit_matrices(params, backend)
    lad = explicit_ladder(params, backend)
    h = backend.real(params.hbar)
    b = backend.real(params.beta)
    eye4 = backend.eye(4)
    checks = [
        CheckResult(f"S{i} golden matrix", "constructed S_i = printed S_i",
                    max_abs(ops.S[i] - fix[i]), tol)
        for i in ("x", "y", "z")
    ]
    checks.append(CheckResult(
        "S+ golden matrix", "S+ = Sx + i Sy printed form",
        max_abs(ops.Splus - lad["plus"]), tol))
    checks.append(CheckResult(
        "S- golden matrix", "S- = Sx - i Sy printed form",
        max_abs(ops.Sminus - lad["minus"]), tol))
    checks.append(CheckResult(
        "Casimir", "S^2 = 3 (hbar+beta)^2 / 4 I",
        max_abs(ops.S2 - backend.scalar((h + b) * (h + b) * 3 / 4) * eye4), tol))
    rep = SuiteReport("fixtures", backend.name, _delta_repr(delta), checks)
    rep.wall_time = time.perf_counter() - t0
    return rep


def run_algebra_suite(delta, backend=FLOAT, tol: float = DEFAULT_TOL) -> SuiteReport:
    """All commutator/anticommutator identities of the subcomponents and
    totals, plus two-particle mutual commutation."""
    t0 = time.perf_counter()
    tol = 0.0 if backend is EXACT else tol
    params = _params_for(delta, backend)
    ops = build_one_particle(params, backend)
    checks = [CheckResult(identity, identity, residual, tol)
              for identity, residual in verify_subalgebras(ops).items()]
    two = build_two_particle(params, backend)
    checks.append(CheckResult(
        "[S_A_i, S_B_j] = 0", "[S_A_i, S_B_j] = 0",
        verify_mutual_commutation(two), tol))
    rep = SuiteReport("algebra", backend.name, _delta_repr(delta), checks)
    rep.wall_time = time.perf_counter() - t0
    return rep


def run_eigen_suite(delta, backend=FLOAT, tol: float = DEFAULT_TOL) -> SuiteReport:
    """Eigen-residuals of the 12 one-particle and 16 two-particle closed
    forms; z-basis orthonormality (braket table)."""
    t0 = time.perf_counter()
    tol = 0.0 if backend is EXACT else tol
    params = _params_for(delta, backend)
    ops = build_one_particle(params, backend)
    normalized = backend is FLOAT
    checks = []
    axes = ("x", "y", "z")
    for axis in axes:
        basis = eigenbasis(ops, axis, normalized=normalized)
        worst = max(eigen_residual(ops.S[axis], ket, lam)
                    for ket, lam in zip(basis.kets(), basis.eigenvalues()))
        checks.append(CheckResult(
            f"one-particle {axis}-basis", f"S_{axis} v = lambda v (4 kets)",
            worst, tol))
        worst2 = max(eigen_residual(ops.S2, ket, ops.S2[0, 0])
                     for ket in basis.kets())
        checks.append(CheckResult(
            f"one-particle {axis}-basis Casimir", "S^2 v = 3(hbar+beta)^2/4 v",
            worst2, tol))
    zbasis = eigenbasis(ops, "z", normalized=normalized)
    table = braket_table(zbasis)
    expected = identity_like(table)
    if not normalized:
        # raw primed kets carry norm^2 = 1 + delta; off-diagonals still vanish
        d = backend.real(params.delta)
        expected[1, 1] = backend.scalar(1 + d)
        expected[3, 3] = backend.scalar(1 + d)
    checks.append(CheckResult(
        "z braket table", "<a|b> = delta_ab for (up, up', down, down')",
        max_abs(table - expected), tol))
    two = build_two_particle(params, backend)
    two_axes = axes if backend is FLOAT else ("z",)
    for axis in two_axes:
        fams = eigenfamilies(two, axis, normalized=normalized)
        worst = max(max(eigen_residual(two.S[axis], f.ket, f.sz_eigenvalue),
                        eigen_residual(two.S2, f.ket, f.s2_eigenvalue))
                    for f in fams)
        checks.append(CheckResult(
            f"two-particle {axis} families",
            f"(S_{axis}, S^2) eigen-residuals for all 16 family kets",
            worst, tol))
        if normalized:
            worstn = max(abs(norm2(f.ket) - 1.0) for f in fams)
            checks.append(CheckResult(
                f"two-particle {axis} norms", "|psi|^2 = 1 for all 16 kets",
                worstn, tol))
    rep = SuiteReport("eigen", backend.name, _delta_repr(delta), checks)
    rep.wall_time = time.perf_counter() - t0
    return rep


def run_flip_suite(delta, backend=FLOAT, tol: float = DEFAULT_TOL) -> SuiteReport:
    """One- and two-particle ladder flip identities on raw kets."""
    t0 = time.perf_counter()
    tol = 0.0 if backend is EXACT else tol
    params = _params_for(delta, backend)
    one = build_one_particle(params, backend)
    checks = [CheckResult(f"one-particle {label}", label, residual, tol)
              for label, residual in spin_flip_check(one).items()]
    two = build_two_particle(params, backend)
    checks += [CheckResult(f"two-particle {label}", label, residual, tol)
               for label, residual in two_particle_flips(two).items()]
    rep = SuiteReport("flips", backend.name, _delta_repr(delta), checks)
    rep.wall_time = time.perf_counter() - t0
    return rep


def run_su2_suite(delta, backend=FLOAT, tol: float = DEFAULT_TOL,
                  samples: int = 100, seed: int = 0) -> SuiteReport:
    """Fundamental relation, group-element identities, and closure against
    the Hamilton-product oracle (random sampling is float-only)."""
    t0 = time.perf_counter()
    exact_tol = 0.0 if backend is EXACT else tol
    d = Fraction(delta) if backend is EXACT else float(delta)
    sigma = build_sigma(d, backend)
    checks = [CheckResult(
        "fundamental relation", "Sigma_i Sigma_j = delta_ij I + i eps Sigma_k",
        fundamental_relation_check(sigma), exact_tol)]
    if backend is FLOAT:
        rng = np.random.default_rng(seed)
        eye4 = np.eye(4, dtype=complex)
        worst_unit = worst_tr = worst_det = worst_close = 0.0
        for _ in range(samples):
            q = rng.normal(size=4)
            q /= np.linalg.norm(q)
            u = QuaternionParams(*q)
            mat = group_element(u, sigma)
            worst_unit = max(worst_unit, max_abs(mat.conj().T @ mat - eye4))
            worst_tr = max(worst_tr, abs(complex(mat.trace()) - 4 * u.u0))
            worst_det = max(worst_det, abs(np.linalg.det(mat) - 1.0))
            q2 = rng.normal(size=4)
            q2 /= np.linalg.norm(q2)
            worst_close = max(worst_close,
                              closure_check(u, QuaternionParams(*q2), sigma))
        checks.append(CheckResult("unitarity", "U^dag U = I", worst_unit, tol))
        checks.append(CheckResult("trace", "tr U = 4 u0", worst_tr, tol))
        checks.append(CheckResult("determinant", "det U = 1", worst_det,
                                  max(tol, 1e-10)))
        checks.append(CheckResult(
            "closure", "U(u) U(v) = U(hamilton(u, v))", worst_close,
            max(tol, 1e-10)))
    rep = SuiteReport("su2", backend.name, _delta_repr(delta), checks)
    rep.wall_time = time.perf_counter() - t0
    return rep


def run_measurement_suite(delta, tol: float = DEFAULT_TOL,
                          mixings: int = 20, seed: int = 0) -> SuiteReport:
    """Analytic conditional probabilities P = 1/2 over random admissible
    mixing coefficients, all ordered axis pairs (float backend only)."""
    t0 = time.perf_counter()
    params = _params_for(delta, FLOAT)
    ops = build_one_particle(params, FLOAT)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(mixings):
        theta = rng.random() * 2 * np.pi
        phase = np.exp(1j * rng.random() * 2 * np.pi)
        a, ap = np.cos(theta), np.sin(theta) * phase
        for ax1 in ("x", "y", "z"):
            for ax2 in ("x", "y", "z"):
                if ax1 == ax2:
                    continue
                for s1 in (1, -1):
                    for s2 in (1, -1):
                        p = conditional_probability(ops, ax1, s1, ax2, s2,
                                                    alpha=a, alpha_prime=ap)
                        worst = max(worst, abs(p - 0.5))
    checks = [CheckResult(
        "conditional probabilities",
        "P(s2_j | s1_i) = 1/2 for all i != j, all admissible mixings",
        worst, tol)]
    rep = SuiteReport("measurement", "float", _delta_repr(delta), checks)
    rep.wall_time = time.perf_counter() - t0
    return rep


ALL_SUITES = {
    "fixtures": run_fixture_suite,
    "algebra": run_algebra_suite,
    "eigen": run_eigen_suite,
    "flips": run_flip_suite,
    "su2": run_su2_suite,
}


def run_all_suites(delta, backend=FLOAT, tol: float = DEFAULT_TOL,
                   seed: int = 0) -> List[SuiteReport]:
    reports = [
        run_fixture_suite(delta, backend, tol),
        run_algebra_suite(delta, backend, tol),
        run_eigen_suite(delta, backend, tol),
        run_flip_suite(delta, backend, tol),
        run_su2_suite(delta, backend, tol, seed=seed),
    ]
    if backend is FLOAT:
        reports.append(run_measurement_suite(delta, tol, seed=seed))
    return reports
