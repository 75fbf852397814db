"""Two-particle eigenfamilies and Bell states on the 16-dim space.

Lists the (Sz, S^2) eigenvalues of all sixteen closed-form eigenvectors,
verifies the ladder flips, and builds maximally correlated states for
measurements along each axis.

Run:  python demos/two_particle_bell.py
"""

import numpy as np

from smearlab import (
    SmearingParams,
    bell_states,
    build_two_particle,
    eigenfamilies,
    two_particle_flips,
)
from smearlab.linalg import eigen_residual


def main():
    params = SmearingParams.from_delta(0.25)
    two = build_two_particle(params)
    scale = float(two.sz_scale)
    print(f"delta = {params.delta}, hbar + beta = {scale}")

    print("\neigenfamilies (label, Sz, S^2, worst residual):")
    for f in eigenfamilies(two, "z"):
        r = max(eigen_residual(two.S["z"], f.ket, f.sz_eigenvalue),
                eigen_residual(two.S2, f.ket, f.s2_eigenvalue))
        print(f"  {f.label:6s}  Sz = {float(f.sz_eigenvalue):+.3f}  "
              f"S^2 = {float(f.s2_eigenvalue):.3f}  residual = {r:.2e}")

    print("\nladder flips (worst 3):")
    flips = two_particle_flips(two)
    for label, r in sorted(flips.items(), key=lambda kv: -kv[1])[:3]:
        print(f"  {r:.3e}  {label}")

    print("\nBell states per axis (S^2 eigen-residuals):")
    for axis in ("x", "y", "z"):
        bell = bell_states(two, axis)
        r_plus = eigen_residual(two.S2, bell["psi_plus"], 2 * scale ** 2)
        r_minus = eigen_residual(two.S2, bell["psi_minus"], 0.0)
        print(f"  axis {axis}: psi_plus {r_plus:.2e}, psi_minus {r_minus:.2e}")

    # anticorrelation: measuring A up forces B down in psi_minus
    bell = bell_states(two, "z")
    psi = np.asarray(bell["psi_minus"], dtype=complex)
    sz_a = np.asarray(two.S_A["z"], dtype=complex)
    sz_b = np.asarray(two.S_B["z"], dtype=complex)
    corr = np.vdot(psi, sz_a @ (sz_b @ psi)).real
    print(f"\n<psi_minus| Sz_A Sz_B |psi_minus> = {corr:.6f} "
          f"(= -(hbar+beta)^2/4 = {-scale ** 2 / 4})")


if __name__ == "__main__":
    main()
