"""Physical constants, Gaussian smearing widths, and uncertainty curves.

Derives the smearing ratio from cgs constants, checks the convolution
broadening of a Gaussian state numerically, and tabulates generalized
uncertainty bound curves including the infeasible minimal-length region.

Run:  python demos/phase_space_bounds.py
"""

import numpy as np

from smearlab import (
    GaussianSmearedState,
    convolution_check,
    derive_constants,
    egup_bound,
    smeared_uncertainties,
)


def main():
    pc = derive_constants()
    print("derived constants (cgs):")
    print(f"  Planck length   {pc.l_planck:.4e} cm")
    print(f"  Planck mass     {pc.m_planck:.4e} g")
    print(f"  de Sitter length {pc.l_desitter:.4e} cm")
    print(f"  de Sitter mass  {pc.m_desitter:.4e} g")
    print(f"  dark energy density {pc.rho_lambda:.4e} g/cm^3")
    print(f"  beta = {pc.beta:.4e} erg s")
    print(f"  delta = beta/hbar = {pc.delta:.4e}")

    st = GaussianSmearedState(sigma_psi=1.0, sigma_g=1.5)
    dx, dp = smeared_uncertainties(st)
    pos_err, mom_err = convolution_check(st)
    print(f"\nGaussian state sigma_psi = {st.sigma_psi}, "
          f"sigma_g = {st.sigma_g}:")
    print(f"  observable widths dx' = {dx:.6f}, dp' = {dp:.6f}")
    print(f"  dx' dp' = {dx * dp:.6f} (unsmeared floor hbar/2 = "
          f"{st.hbar / 2})")
    print(f"  numeric convolution errors: position {pos_err:.2e}, "
          f"momentum {mom_err:.2e}")

    print("\nbound curves at dx in {0.5, 1, 2, 5} (hbar = 1):")
    dx_vals = [0.5, 1.0, 2.0, 5.0]
    configs = [("HUP", 0.0, 0.0), ("GUP", 0.2, 0.0),
               ("EUP", 0.0, 0.2), ("EGUP", 0.2, 0.2)]
    header = "  dx     " + "".join(f"{name:>12s}" for name, _, _ in configs)
    print(header)
    curves = {name: egup_bound(a, e, dx_vals).samples
              for name, a, e in configs}
    for k, dx_v in enumerate(dx_vals):
        cells = []
        for name, _, _ in configs:
            s = curves[name][k]
            cells.append(f"{s.dp_bound:12.6f}" if s.feasible
                         else f"{'infeasible':>12s}")
        print(f"  {dx_v:<7.2f}" + "".join(cells))

    # minimal-length region: below dx = hbar sqrt(eta) the EUP curve has
    # no real solution
    eta = 0.2
    edge = np.sqrt(eta)
    curve = egup_bound(0.0, eta, [0.9 * edge, 1.1 * edge])
    print(f"\nEUP feasibility around dx = sqrt(eta) = {edge:.4f}: "
          f"{[s.feasible for s in curve.samples]}")


if __name__ == "__main__":
    main()
