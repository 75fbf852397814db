"""Scalar phenomenology: physical constants, Gaussian smeared states,
convolution checks, and generalized uncertainty bound curves.

All dimensional quantities are cgs.  The headline number is the smearing
ratio delta = beta/hbar ~ 1e-61, fixed by the ratio of the dark energy
density to the Planck density.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import numpy as np

# CODATA-order cgs values; Lambda from the observed cosmological constant
DEFAULT_RAW_CONSTANTS = {
    "G": 6.67430e-8,        # cm^3 g^-1 s^-2
    "c": 2.99792458e10,     # cm s^-1
    "hbar": 1.054571817e-27,  # erg s
    "Lambda": 1.1e-56,      # cm^-2
}


@dataclass(frozen=True)
class PhysicalConstants:
    G: float
    c: float
    hbar: float
    Lambda: float
    l_planck: float
    m_planck: float
    l_desitter: float
    m_desitter: float
    rho_lambda: float
    rho_planck: float
    beta: float

    @property
    def delta(self) -> float:
        return self.beta / self.hbar


def derive_constants(raw: Dict[str, float] = None) -> PhysicalConstants:
    """Derive the Planck/de Sitter scales and the geometry action constant
    beta = 2 hbar sqrt(rho_Lambda / rho_Planck) from {G, c, hbar, Lambda}.

    rho_Planck is the mass density m_Pl / l_Pl^3 and rho_Lambda the dark
    energy (mass) density Lambda c^2 / (8 pi G).
    """
    if raw is None:
        raw = DEFAULT_RAW_CONSTANTS
    for key in ("G", "c", "hbar", "Lambda"):
        if key not in raw:
            raise ValueError(f"missing constant {key!r}")
        if raw[key] <= 0:
            raise ValueError(f"{key} must be positive, got {raw[key]}")
    g, c, hbar, lam = raw["G"], raw["c"], raw["hbar"], raw["Lambda"]
    l_pl = math.sqrt(hbar * g / c ** 3)
    m_pl = math.sqrt(hbar * c / g)
    l_ds = math.sqrt(3.0 / lam)
    m_ds = (hbar / c) * math.sqrt(lam / 3.0)
    rho_lam = lam * c ** 2 / (8.0 * math.pi * g)
    rho_pl = m_pl / l_pl ** 3
    beta = 2.0 * hbar * math.sqrt(rho_lam / rho_pl)
    return PhysicalConstants(
        G=g, c=c, hbar=hbar, Lambda=lam,
        l_planck=l_pl, m_planck=m_pl,
        l_desitter=l_ds, m_desitter=m_ds,
        rho_lambda=rho_lam, rho_planck=rho_pl,
        beta=beta,
    )


@dataclass(frozen=True)
class GaussianSmearedState:
    """Gaussian matter wavefunction smeared by a Gaussian background.

    sigma_psi is the position width of the matter state, sigma_g the
    position width of the smearing kernel; the momentum widths follow by
    Fourier duality at scale hbar for matter and beta for the background,
    so sigma_g_tilde * sigma_g = beta / 2.
    """

    sigma_psi: float
    sigma_g: float
    hbar: float = 1.0
    beta: float = 1.0

    def __post_init__(self):
        for name in ("sigma_psi", "sigma_g", "hbar", "beta"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @property
    def sigma_psi_momentum(self) -> float:
        return self.hbar / (2.0 * self.sigma_psi)

    @property
    def sigma_g_tilde(self) -> float:
        return self.beta / (2.0 * self.sigma_g)


def smeared_uncertainties(state: GaussianSmearedState) -> Tuple[float, float]:
    """Observable widths (dx', dp'): quadrature sums of the matter and
    smearing widths in position and momentum space."""
    dx = math.hypot(state.sigma_psi, state.sigma_g)
    dp = math.hypot(state.sigma_psi_momentum, state.sigma_g_tilde)
    return dx, dp


def _grid_std(x: np.ndarray, density: np.ndarray) -> float:
    w = density / np.trapezoid(density, x)
    mean = np.trapezoid(x * w, x)
    return math.sqrt(float(np.trapezoid((x - mean) ** 2 * w, x)))


def convolution_check(state: GaussianSmearedState, extent_sigmas: float = 12.0,
                      points: int = 4096) -> Tuple[float, float]:
    """Relative error of the numeric convolution widths against the
    analytic quadrature sums, in position and momentum space.

    The measured probability density is the convolution of the matter
    density with the smearing density; its standard deviation must equal
    the quadrature sum.  The grid must resolve the narrowest Gaussian
    with at least 8 points per standard deviation.
    """
    errors = []
    for s1, s2 in ((state.sigma_psi, state.sigma_g),
                   (state.sigma_psi_momentum, state.sigma_g_tilde)):
        smin = min(s1, s2)
        smax = max(s1, s2)
        half = extent_sigmas * smax
        step = 2.0 * half / (points - 1)
        if smin / step < 8.0:
            raise ValueError(
                f"grid under-resolved: {smin / step:.2f} points per smallest "
                f"sigma, need >= 8 (increase points or reduce extent)")
        x = np.linspace(-half, half, points)
        d1 = np.exp(-x ** 2 / (2.0 * s1 ** 2))
        d2 = np.exp(-x ** 2 / (2.0 * s2 ** 2))
        conv = np.convolve(d1, d2, mode="same")
        measured = _grid_std(x, conv)
        analytic = math.hypot(s1, s2)
        errors.append(abs(measured - analytic) / analytic)
    return errors[0], errors[1]


@dataclass(frozen=True)
class BoundSample:
    dx: float
    dp_bound: float
    feasible: bool


@dataclass(frozen=True)
class BoundCurve:
    alpha: float
    eta: float
    hbar: float
    samples: List[BoundSample] = field(default_factory=list)

    def feasible_samples(self) -> List[BoundSample]:
        return [s for s in self.samples if s.feasible]


def egup_bound(alpha: float, eta: float, dx_values: Sequence[float],
               hbar: float = 1.0) -> BoundCurve:
    """Solve dx dp = (hbar/2)(1 + alpha dx^2 + eta dp^2) for the smaller
    positive dp root at each dx.

    With eta > 0 the equation is quadratic in dp; dx values where the
    discriminant is negative (inside the minimal-length region) are
    flagged infeasible with dp_bound = nan.  eta = 0 reduces to the
    closed form (hbar / 2 dx)(1 + alpha dx^2); alpha = eta = 0 is the
    plain hyperbola dx dp = hbar / 2.
    """
    if alpha < 0 or eta < 0:
        raise ValueError("alpha and eta must be nonnegative")
    samples = []
    for dx in dx_values:
        if dx <= 0:
            raise ValueError(f"dx must be positive, got {dx}")
        base = 1.0 + alpha * dx * dx
        if eta == 0.0:
            samples.append(BoundSample(dx, hbar * base / (2.0 * dx), True))
            continue
        # (hbar eta / 2) dp^2 - dx dp + (hbar/2) base = 0
        disc = dx * dx - hbar * hbar * eta * base
        if disc < 0:
            samples.append(BoundSample(dx, math.nan, False))
            continue
        dp = (dx - math.sqrt(disc)) / (hbar * eta)
        samples.append(BoundSample(dx, dp, True))
    return BoundCurve(alpha=alpha, eta=eta, hbar=hbar, samples=list(samples))
