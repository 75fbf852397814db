"""Group elements of the 4-dim unitary representation.

Checks the fundamental generator relation, builds elements from axis-angle
and quaternion parameters, and compares matrix composition against the
plain Hamilton product.

Run:  python demos/su2_representation.py
"""

import math

import numpy as np

from smearlab import (
    AxisAngle,
    QuaternionParams,
    build_sigma,
    closure_check,
    compose,
    fundamental_relation_check,
    group_element,
)


def main():
    delta = 0.25
    ss = build_sigma(delta)
    print(f"delta = {delta}")
    print(f"fundamental relation residual: "
          f"{fundamental_relation_check(ss):.3e}")

    rot = AxisAngle(n=(0.0, 0.0, 1.0), theta=math.pi / 2)
    u = rot.to_quaternion()
    mat = np.asarray(group_element(u, ss), dtype=complex)
    print(f"\n90-degree rotation about z -> quaternion "
          f"({u.u0:.4f}, {u.u1:.4f}, {u.u2:.4f}, {u.u3:.4f})")
    print("U =")
    print(np.round(mat, 4))
    print(f"det U = {np.linalg.det(mat):.6f}")
    print(f"tr U = {mat.trace():.6f} (= 4 u0 = {4 * u.u0:.6f})")

    # compose two random elements and compare against the quaternion oracle
    rng = np.random.default_rng(0)
    q1, q2 = rng.normal(size=4), rng.normal(size=4)
    q1 /= np.linalg.norm(q1)
    q2 /= np.linalg.norm(q2)
    a, b = QuaternionParams(*q1), QuaternionParams(*q2)
    w = compose(a, b)
    print(f"\ncomposition of two random elements:")
    print(f"  parameters ({w.u0:+.4f}, {w.u1:+.4f}, {w.u2:+.4f}, {w.u3:+.4f})")
    print(f"  closure residual vs Hamilton product: "
          f"{closure_check(a, b, ss):.3e}")

    # four quarter turns about the same axis come back to -I (spinor sign)
    quarter = AxisAngle(n=(1.0, 0.0, 0.0), theta=math.pi / 2).to_quaternion()
    total = quarter
    for _ in range(3):
        total = compose(total, quarter)
    full = np.asarray(group_element(total, ss), dtype=complex)
    print(f"\nfour quarter turns about x: max |U + I| = "
          f"{np.max(np.abs(full + np.eye(4))):.3e} (spinor double cover)")


if __name__ == "__main__":
    main()
