"""Tour of two-particle coupling: channels, tables, and a state decomposition.

Builds an equal-mass spin-1/2 pair, walks the coupling channels for total
spin 0 and 1, evaluates the angular coefficient tables at a direction, and
projects a maximally spin-correlated product state onto partial waves.

Run: python3 demos/coupled_state_tour.py
"""

import math

import numpy as np

from poincare_cgc import (
    HalfInt,
    TwoParticleSpec,
    angular_spin_orbit_com,
    bell_state,
    components,
    decompose_product_state,
    discrete_symmetry_labels,
    enumerate_channels,
)

SPEC = TwoParticleSpec.fermion_pair(1.0)
PAIR_S = 9.0  # any invariant mass above the 4 m^2 threshold


def show_channels():
    print("coupling channels of an equal-mass spin-1/2 pair")
    print(f"{'j':>3} {'s':>3} {'l':>3} {'parity':>7} {'charge':>7}")
    for j in (0, 1):
        for channel in enumerate_channels(SPEC, j, "spin-orbit"):
            parity, charge = discrete_symmetry_labels(channel.l, channel.s)
            print(
                f"{j:>3} {int(channel.s):>3} {int(channel.l):>3}"
                f" {parity:>+7} {charge:>+7}"
            )
    print()


def show_table(theta=0.7, phi=0.3):
    print(f"orbital/spin coupling amplitudes at theta={theta}, phi={phi}")
    print("channel (l=1, s=1) coupled to j=1, all components and spin slots")
    for chi in components(HalfInt(2)):
        row = []
        for c1 in components(SPEC.j1):
            for c2 in components(SPEC.j2):
                val = angular_spin_orbit_com(SPEC, 1, 1, 1, chi, c1, c2, theta, phi)
                row.append(f"{val.real:+.4f}{val.imag:+.4f}j")
        print(f"  component {int(chi):+d}:  " + "  ".join(row))
    print()


def show_decomposition():
    print("partial waves of the antisymmetric anti-aligned pair at the +z axis")
    dec = decompose_product_state(bell_state("psi11"), SPEC, PAIR_S, 1)
    print(f"{'j':>3} {'l':>3} {'s':>3} {'component':>10} {'coefficient':>24}")
    for e in dec.entries:
        c = e.coefficient
        print(
            f"{int(e.j):>3} {int(e.channel.l):>3} {int(e.channel.s):>3}"
            f" {int(e.component):>10} {c.real:>+15.10f}{c.imag:>+.10f}j"
        )
    singlet = dec.entries[0].coefficient
    print(f"singlet coefficient: {singlet.real:.15f}")
    print(f"1/(2 sqrt(pi))     : {1.0 / (2.0 * math.sqrt(np.pi)):.15f}")
    print(
        "only spin-singlet (s=0) channels are populated; a direction-localized"
    )
    print(
        "state carries every orbital wave, so l=0 and l=1 both appear at j_max=1"
    )
    print()


if __name__ == "__main__":
    show_channels()
    show_table()
    show_decomposition()
