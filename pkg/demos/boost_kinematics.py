"""Standard boosts and their little-group elements.

Carries a rest momentum to a generic on-shell momentum with both standard
boosts, then shows the structure of the little-group (Wigner) rotations:
generic Lorentz transformations land in SU(2), pure rotations reproduce
themselves in the rotationless convention, and the helicity convention
turns every rotation into a z-axis phase.

Run: python3 demos/boost_kinematics.py
"""

import numpy as np

from poincare_cgc import (
    FourMomentum,
    Kinematics,
    TwoParticleSpec,
    apply_lorentz,
    canonical_boost,
    helicity_boost,
    wigner_rotation,
)
from poincare_cgc.lorentz import SpinorTransform


def restore_momentum():
    m2 = 1.0
    p = FourMomentum.on_shell(m2, np.array([0.6, -1.1, 2.0]))
    rest = FourMomentum.rest(m2)
    print(f"target momentum: E={p.energy:.6f}, p={np.round(p.p, 6)}")
    for name, boost in (
        ("rotationless", canonical_boost(p, m2)),
        ("helicity    ", helicity_boost(p, m2)),
    ):
        got = apply_lorentz(boost, rest)
        err = np.abs(got.as_array() - p.as_array()).max()
        print(f"{name} boost restores it to {err:.3e}")
    print()


def wigner_structure():
    rng = np.random.default_rng(7)
    m2 = 1.0
    p = FourMomentum.on_shell(m2, rng.normal(size=3))

    # a generic boost produces a genuine SU(2) little-group element
    q = FourMomentum.on_shell(4.0, np.array([0.4, 1.3, -0.2]))
    boost = canonical_boost(q, 4.0)
    w = wigner_rotation(boost, p).matrix
    print("generic boost, rotationless convention:")
    print(f"  |W W+ - 1| = {np.abs(w @ w.conj().T - np.eye(2)).max():.3e}, "
          f"|det W - 1| = {abs(np.linalg.det(w) - 1.0):.3e}")

    # a pure rotation is its own little-group element in that convention
    angle, axis = 0.9, np.array([0.2, 0.7, -0.4]) / np.linalg.norm([0.2, 0.7, -0.4])
    sigma = np.array(
        [[[0, 1], [1, 0]], [[0, -1j], [1j, 0]], [[1, 0], [0, -1]]], dtype=complex
    )
    u = np.cos(angle / 2) * np.eye(2) - 1j * np.sin(angle / 2) * np.tensordot(
        axis, sigma, axes=1
    )
    w_rot = wigner_rotation(SpinorTransform(u), p).matrix
    print("pure rotation, rotationless convention:")
    print(f"  |W - u| = {np.abs(w_rot - u).max():.3e} (the rotation represents itself)")

    # the helicity convention yields a diagonal z-phase for any rotation
    w_hel = wigner_rotation(SpinorTransform(u), p, "helicity").matrix
    off = max(abs(w_hel[0, 1]), abs(w_hel[1, 0]))
    print("pure rotation, helicity convention:")
    print(f"  off-diagonal magnitude = {off:.3e} (a pure z-axis phase)")
    print()


def two_body_momenta():
    spec = TwoParticleSpec.fermion_pair(1.0)
    kin = Kinematics.for_spec(spec, 9.0)
    direction = np.array([0.0, 0.6, 0.8])
    p1, p2 = kin.momenta(direction)
    total = p1 + p2
    print("equal-mass pair at s = 9 in its center of momentum frame:")
    print(f"  p1 = ({p1.energy:.6f}, {np.round(p1.p, 6)})")
    print(f"  p2 = ({p2.energy:.6f}, {np.round(p2.p, 6)})")
    print(f"  total spatial momentum: {np.abs(total.p).max():.3e}")
    print(f"  invariant mass squared: {total.mass2:.6f}")


if __name__ == "__main__":
    restore_momentum()
    wigner_structure()
    two_body_momenta()
