"""Tests for coupling channels, two-body kinematics, and coupling amplitudes."""

import numpy as np
import pytest

from conftest import random_momentum, random_su2

from poincare_cgc import (
    BelowThreshold,
    FourMomentum,
    HalfInt,
    HelicityChannel,
    InvalidChannel,
    Kinematics,
    MasslessUnsupported,
    SpinOrbitChannel,
    TwoParticleSpec,
    angular_helicity_com,
    angular_helicity_general,
    angular_spin_orbit_com,
    angular_spin_orbit_general,
    apply_lorentz,
    canonical_boost,
    component_index,
    components,
    coupling_channels,
    discrete_symmetry_labels,
    enumerate_channels,
    helicity_com_scalar,
    helicity_com_table,
    helicity_general_table,
    helicity_to_wigner,
    relative_direction,
    relative_momentum,
    rep_matrix,
    spin_orbit_com_table,
    spin_orbit_general_table,
    wigner_rotation,
)
from poincare_cgc.cgc import inverse_com_wigner, triangle
from poincare_cgc.lorentz import direction_rotation, polar_angles, spinor_to_lorentz
from poincare_cgc.reference_tables import CHANNEL_ROWS, reference_cells, variant_cells

FERMION_PAIR = TwoParticleSpec.fermion_pair(1.0)
PAIR_S = 9.0


def test_spec_validation():
    spec = TwoParticleSpec.fermion_pair(1.0)
    assert spec.spin_shape == (2, 2)
    assert spec.j1 == HalfInt.of(0.5) and spec.s2 == 1.0
    assert TwoParticleSpec.fermion_pair(1.0, 4.0).s2 == 4.0
    with pytest.raises(MasslessUnsupported):
        TwoParticleSpec.fermion_pair(0.0)
    with pytest.raises(ValueError):
        TwoParticleSpec(1.0, 1.0, -0.5, 0.5)


@pytest.mark.parametrize(
    "j, labels",
    [
        (0, ["l=0,s=0", "l=1,s=1"]),
        (1, ["l=1,s=0", "l=0,s=1", "l=1,s=1", "l=2,s=1"]),
        (2, ["l=2,s=0", "l=1,s=1", "l=2,s=1", "l=3,s=1"]),
    ],
)
def test_spin_orbit_channel_enumeration(j, labels):
    """Channels come out ordered by total spin s, then by orbital l."""
    chans = enumerate_channels(FERMION_PAIR, j, "spin-orbit")
    assert [c.label() for c in chans] == labels
    assert coupling_channels(FERMION_PAIR, j, "spin-orbit") == chans


def test_spin_orbit_enumeration_parity_filter():
    # two spin-1/2 constituents cannot couple to half-integer total spin
    assert enumerate_channels(FERMION_PAIR, 0.5, "spin-orbit") == []
    mixed = TwoParticleSpec(1.0, 1.0, 1.0, 0.5)
    labels = [c.label() for c in enumerate_channels(mixed, 0.5, "spin-orbit")]
    assert labels == ["l=0,s=1/2", "l=1,s=1/2", "l=1,s=3/2", "l=2,s=3/2"]


def test_helicity_channel_enumeration():
    """The helicity grid is fixed; coupling keeps only |lam1 - lam2| <= j."""
    chans = enumerate_channels(FERMION_PAIR, 1, "helicity")
    labels = [c.label() for c in chans]
    assert labels == [
        "lam1=1/2,lam2=1/2",
        "lam1=1/2,lam2=-1/2",
        "lam1=-1/2,lam2=1/2",
        "lam1=-1/2,lam2=-1/2",
    ]
    assert enumerate_channels(FERMION_PAIR, 0, "helicity") == chans
    kept = coupling_channels(FERMION_PAIR, 0, "helicity")
    assert [c.label() for c in kept] == ["lam1=1/2,lam2=1/2", "lam1=-1/2,lam2=-1/2"]
    assert coupling_channels(FERMION_PAIR, 1, "helicity") == chans
    # the dropped channels really do carry an identically zero amplitude
    dropped = HelicityChannel(0.5, -0.5)
    theta = np.linspace(0.1, 3.0, 7)
    assert np.all(helicity_com_scalar(FERMION_PAIR, 0, dropped, 0, theta, 0.3) == 0.0)


def test_channel_labels_and_validation():
    assert SpinOrbitChannel(2, 1).label() == "l=2,s=1"
    assert HelicityChannel(0.5, -0.5).mu == HalfInt.of(1)
    with pytest.raises(InvalidChannel):
        SpinOrbitChannel(0.5, 1)
    with pytest.raises(InvalidChannel):
        SpinOrbitChannel(-1, 1)
    with pytest.raises(ValueError):
        enumerate_channels(FERMION_PAIR, 1, "canonical")


@pytest.mark.parametrize("l", [0, 1, 2, 3, 4])
@pytest.mark.parametrize("s", [0, 1])
def test_discrete_symmetry_labels(l, s):
    parity, charge = discrete_symmetry_labels(l, s)
    assert parity == (-1) ** (l + 1)
    assert charge == (-1) ** (l + s)


def test_discrete_symmetry_label_validation():
    with pytest.raises(InvalidChannel):
        discrete_symmetry_labels(0.5, 1)
    with pytest.raises(InvalidChannel):
        discrete_symmetry_labels(-1, 0)
    with pytest.raises(InvalidChannel):
        discrete_symmetry_labels(1, 2)


def test_channel_table_rows_reproduced():
    """The frozen six-row channel table comes out of enumeration plus labels."""
    got = []
    for j in (0, 1):
        for channel in enumerate_channels(FERMION_PAIR, j, "spin-orbit"):
            parity, charge = discrete_symmetry_labels(channel.l, channel.s)
            got.append((HalfInt.of(j), channel.s, channel.l, parity, charge))
    want = [(r.j, r.s, r.l, r.parity, r.charge_parity) for r in CHANNEL_ROWS]
    assert got == want


def test_variant_charge_parity_rows_are_inconsistent():
    """The deviating signs assign opposite charge parity to one (l, s) pair.

    The (s=1, l=1) channel occurs under both j=0 and j=1. The stored
    variant keeps +1 for the first and flips the second to -1, so no
    function of (l, s) alone can reproduce the variant column.
    """
    variants = [r for r in CHANNEL_ROWS if r.variant_charge_parity is not None]
    assert len(variants) == 2
    for row in variants:
        assert row.variant_charge_parity == -row.charge_parity
    same = [r for r in CHANNEL_ROWS if (r.l, r.s) == (HalfInt(2), HalfInt(2))]
    signs = {r.variant_charge_parity or r.charge_parity for r in same}
    assert signs == {-1, +1}


def test_triangle_function():
    assert triangle(9.0, 1.0, 1.0) == 45.0
    assert triangle(16.0, 1.0, 4.0) == 105.0
    rng = np.random.default_rng(3)
    for _ in range(20):
        a, b, c = rng.uniform(0.1, 30.0, size=3)
        assert triangle(a, b, c) == triangle(c, a, b) == triangle(b, c, a)


def test_kinematics_hand_values():
    kin = Kinematics.for_spec(FERMION_PAIR, PAIR_S)
    assert kin.delta == 45.0
    assert kin.k == pytest.approx(np.sqrt(1.25), abs=1e-15)
    assert kin.e1 == kin.e2 == 1.5
    uneven = Kinematics(16.0, 1.0, 4.0)
    assert uneven.e1 == pytest.approx(13.0 / 8.0, abs=1e-15)
    assert uneven.e2 == pytest.approx(19.0 / 8.0, abs=1e-15)
    assert uneven.e1 + uneven.e2 == pytest.approx(4.0, abs=1e-15)
    assert uneven.e1**2 - uneven.k**2 == pytest.approx(1.0, abs=1e-12)
    assert uneven.e2**2 - uneven.k**2 == pytest.approx(4.0, abs=1e-12)


def test_kinematics_momenta():
    kin = Kinematics.for_spec(FERMION_PAIR, PAIR_S)
    p1, p2 = kin.momenta([2.0, -1.0, 0.5])  # unnormalized on purpose
    assert np.allclose(p1.as_array()[1:] + p2.as_array()[1:], 0.0)
    assert np.linalg.norm(p1.as_array()[1:]) == pytest.approx(kin.k, abs=1e-14)
    assert p1.mass2 == pytest.approx(1.0, abs=1e-12)
    assert p2.mass2 == pytest.approx(1.0, abs=1e-12)
    rest = kin.pair_momentum()
    assert np.allclose((p1 + p2).as_array(), rest.as_array())


def test_kinematics_threshold_errors():
    with pytest.raises(BelowThreshold):
        Kinematics(4.0, 1.0, 1.0)  # sqrt(s) equals the mass sum
    with pytest.raises(BelowThreshold):
        Kinematics(3.0, 1.0, 1.0)
    with pytest.raises(MasslessUnsupported):
        Kinematics(9.0, 0.0, 1.0)


def test_rest_frame_hand_values(rng):
    """A few closed forms checked straight against the coupling functions."""
    theta = rng.uniform(0.0, np.pi)
    phi = rng.uniform(0.0, 2 * np.pi)
    spec = FERMION_PAIR
    root = 1.0 / np.sqrt(8.0 * np.pi)
    assert angular_spin_orbit_com(spec, 0, 0, 0, 0, 0.5, -0.5, theta, phi) == pytest.approx(root)
    assert angular_spin_orbit_com(spec, 0, 0, 0, 0, -0.5, 0.5, theta, phi) == pytest.approx(-root)
    assert angular_spin_orbit_com(spec, 1, 0, 1, 1, 0.5, 0.5, theta, phi) == pytest.approx(
        -1.0 / (2.0 * np.sqrt(np.pi))
    )
    assert angular_helicity_com(spec, 0, 0.5, 0.5, 0, theta, phi) == pytest.approx(
        np.sqrt(1.0 / (4.0 * np.pi))
    )
    assert angular_helicity_com(spec, 1, 0.5, -0.5, 1, theta, phi) == pytest.approx(
        np.sqrt(3.0 / (4.0 * np.pi)) * (1.0 + np.cos(theta)) / 2.0
    )


@pytest.mark.parametrize(
    "scheme, j, count",
    [("spin-orbit", 0, 8), ("spin-orbit", 1, 48), ("helicity", 0, 2), ("helicity", 1, 12)],
)
def test_reference_cells_match_tables(scheme, j, count, rng):
    """Every frozen closed form agrees with the live amplitude."""
    cells = reference_cells(scheme, j)
    assert len(cells) == count
    table_fn = spin_orbit_com_table if scheme == "spin-orbit" else helicity_com_table
    angles = [(rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi)) for _ in range(10)]
    for cell in cells:
        a = component_index(FERMION_PAIR.j1, cell.pair[0])
        b = component_index(FERMION_PAIR.j2, cell.pair[1])
        for theta, phi in angles:
            got = table_fn(FERMION_PAIR, cell.j, cell.channel, cell.component, theta, phi)
            assert abs(got[a, b] - complex(cell.value(theta, phi))) < 1e-12


@pytest.mark.parametrize("scheme, j", [("spin-orbit", 0), ("spin-orbit", 1), ("helicity", 1)])
def test_reference_cells_emission_order(scheme, j):
    """Cells are stored channel by channel, components descending, pairs row-major."""
    cells = reference_cells(scheme, j)
    expected = []
    for channel in coupling_channels(FERMION_PAIR, j, scheme):
        for chi in components(HalfInt.of(j)):
            if scheme == "spin-orbit":
                for c1 in components(FERMION_PAIR.j1):
                    for c2 in components(FERMION_PAIR.j2):
                        expected.append((channel, chi, (c1, c2)))
            else:
                expected.append((channel, chi, (channel.lam1, channel.lam2)))
    assert [(c.channel, c.component, c.pair) for c in cells] == expected


def test_variant_cells_deviate_but_library_matches_main_form():
    """The circulating variant forms differ measurably; the code follows the main ones."""
    cells = variant_cells()
    assert len(cells) == 11
    theta, phi = 0.4, 0.9  # keeps every variant form real and finite
    for cell in cells:
        main = complex(cell.value(theta, phi))
        variant = complex(cell.variant_value(theta, phi))
        assert abs(main - variant) > 1e-3
        assert cell.note
        table_fn = spin_orbit_com_table if cell.scheme == "spin-orbit" else helicity_com_table
        got = table_fn(FERMION_PAIR, cell.j, cell.channel, cell.component, theta, phi)
        a = component_index(FERMION_PAIR.j1, cell.pair[0])
        b = component_index(FERMION_PAIR.j2, cell.pair[1])
        assert abs(got[a, b] - main) < 1e-12
        assert abs(got[a, b] - variant) > 1e-3


def test_reference_cells_validation():
    with pytest.raises(ValueError):
        reference_cells("dirac", 0)
    with pytest.raises(ValueError, match="available"):
        reference_cells("spin-orbit", 2)


def test_amplitude_argument_validation():
    with pytest.raises(ValueError):
        angular_spin_orbit_com(FERMION_PAIR, 1, 0, 1, 0.5, 0.5, 0.5, 0.1, 0.2)
    with pytest.raises(ValueError):
        angular_spin_orbit_com(FERMION_PAIR, 1, 0, 1, 2, 0.5, 0.5, 0.1, 0.2)
    with pytest.raises(InvalidChannel):
        spin_orbit_com_table(FERMION_PAIR, 1, SpinOrbitChannel(0, 0), 0, 0.1, 0.2)
    with pytest.raises(InvalidChannel):
        helicity_com_scalar(FERMION_PAIR, 1, HelicityChannel(1.5, 0.5), 1, 0.1, 0.2)


def test_table_broadcasting_and_slots(rng):
    theta = np.linspace(0.2, 2.9, 5)
    table = spin_orbit_com_table(FERMION_PAIR, 1, SpinOrbitChannel(1, 1), 0, theta, 0.7)
    assert table.shape == (5, 2, 2)
    single = angular_spin_orbit_com(FERMION_PAIR, 1, 1, 1, 0, 0.5, -0.5, theta, 0.7)
    assert single.shape == (5,)
    assert np.allclose(single, table[:, 0, 1])
    hel = helicity_com_table(FERMION_PAIR, 1, HelicityChannel(0.5, -0.5), 1, theta, 0.7)
    assert hel.shape == (5, 2, 2)
    # only the channel's own helicity slot is populated
    assert np.all(hel[:, 0, 0] == 0.0) and np.all(hel[:, 1, :] == 0.0)
    scalar = helicity_com_scalar(FERMION_PAIR, 1, HelicityChannel(0.5, -0.5), 1, theta, 0.7)
    assert np.allclose(hel[:, 0, 1], scalar)


@pytest.mark.parametrize("scheme", ["spin-orbit", "helicity"])
def test_general_frame_reduces_to_rest_frame(scheme, rng):
    """With the pair at rest the general-frame amplitudes are the rest-frame ones."""
    kin = Kinematics.for_spec(FERMION_PAIR, PAIR_S)
    for _ in range(6):
        theta = float(rng.uniform(0, np.pi))
        phi = float(rng.uniform(0, 2 * np.pi))
        n = np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])
        p1, p2 = kin.momenta(n)
        for channel in coupling_channels(FERMION_PAIR, 1, scheme):
            for chi in (-1, 0, 1):
                if scheme == "spin-orbit":
                    general = spin_orbit_general_table(FERMION_PAIR, 1, channel, chi, p1, p2)
                    com = spin_orbit_com_table(FERMION_PAIR, 1, channel, chi, theta, phi)
                else:
                    general = helicity_general_table(FERMION_PAIR, 1, channel, chi, p1, p2)
                    com = helicity_com_table(FERMION_PAIR, 1, channel, chi, theta, phi)
                assert np.abs(general - com).max() < 1e-12


def test_general_frame_off_shell_guard():
    kin = Kinematics.for_spec(FERMION_PAIR, PAIR_S)
    p1, p2 = kin.momenta([0.0, 0.0, 1.0])
    heavy = FourMomentum.on_shell(2.0, p1.as_array()[1:])
    with pytest.raises(ValueError, match="off shell"):
        spin_orbit_general_table(FERMION_PAIR, 1, SpinOrbitChannel(1, 1), 0, heavy, p2)


def test_spin_orbit_boosted_covariance(rng):
    """Boosting both momenta rotates the spin slots and mixes components of j.

    Each constituent slot picks up its own little-group rotation and the
    coupled component mixes through the rotation of the pair's rest
    momentum, exactly as for a single irrep.
    """
    kin = Kinematics.for_spec(FERMION_PAIR, PAIR_S)
    j = HalfInt(2)
    channel = SpinOrbitChannel(1, 1)
    worst = 0.0
    for _ in range(4):
        n = rng.normal(size=3)
        n /= np.linalg.norm(n)
        p1, p2 = kin.momenta(n)
        boost = canonical_boost(random_momentum(rng, 4.0, 1.5))
        q1, q2 = apply_lorentz(boost, p1), apply_lorentz(boost, p2)
        d1 = rep_matrix(FERMION_PAIR.j1, wigner_rotation(boost, p1).matrix)
        d2 = rep_matrix(FERMION_PAIR.j2, wigner_rotation(boost, p2).matrix)
        dj = rep_matrix(j, wigner_rotation(boost, FourMomentum.rest(PAIR_S)).matrix)
        for chi in components(j):
            lhs = spin_orbit_general_table(FERMION_PAIR, j, channel, chi, q1, q2)
            icol = component_index(j, chi)
            rhs = np.zeros_like(lhs)
            for chi_p in components(j):
                table = spin_orbit_general_table(FERMION_PAIR, j, channel, chi_p, p1, p2)
                rhs += dj[component_index(j, chi_p), icol] * np.einsum(
                    "ac,bd,cd->ab", d1, d2, table
                )
            worst = max(worst, float(np.abs(lhs - rhs).max()))
    assert worst < 1e-10


def test_helicity_tables_break_the_spin_orbit_covariance_law(rng):
    """Regression: helicity labels are frame-tied, not boost-covariant.

    For the canonical scheme the boosted table factorizes through per-slot
    Wigner rotations (previous test). Applying the same factorization to
    helicity tables must fail badly for a generic boost, because helicity
    Wigner rotations depend on each momentum separately.
    """
    kin = Kinematics.for_spec(FERMION_PAIR, PAIR_S)
    j = HalfInt(2)
    channel = HelicityChannel(0.5, -0.5)
    boost = canonical_boost(FourMomentum.on_shell(4.0, np.array([1.3, -0.4, 0.8])))
    worst = 0.0
    for _ in range(8):
        n = rng.normal(size=3)
        n /= np.linalg.norm(n)
        p1, p2 = kin.momenta(n)
        q1, q2 = apply_lorentz(boost, p1), apply_lorentz(boost, p2)
        d1 = rep_matrix(FERMION_PAIR.j1, wigner_rotation(boost, p1, "helicity").matrix)
        d2 = rep_matrix(FERMION_PAIR.j2, wigner_rotation(boost, p2, "helicity").matrix)
        dj = rep_matrix(j, wigner_rotation(boost, FourMomentum.rest(PAIR_S), "helicity").matrix)
        for chi in components(j):
            lhs = helicity_general_table(FERMION_PAIR, j, channel, chi, q1, q2)
            icol = component_index(j, chi)
            rhs = np.zeros_like(lhs)
            for chi_p in components(j):
                table = helicity_general_table(FERMION_PAIR, j, channel, chi_p, p1, p2)
                rhs += dj[component_index(j, chi_p), icol] * np.einsum(
                    "ac,bd,cd->ab", d1, d2, table
                )
            worst = max(worst, float(np.abs(lhs - rhs).max()))
    assert worst > 0.1


def test_relative_momentum_properties(rng):
    """The relative vector is purely spatial and unit normalized."""
    for _ in range(50):
        p1 = random_momentum(rng, 1.0, 4.0)
        p2 = random_momentum(rng, 4.0, 4.0)
        for convention in ("canonical", "helicity"):
            e = relative_momentum(p1, p2, convention)
            assert abs(e[0]) < 1e-10
            assert abs(np.linalg.norm(e[1:]) - 1.0) < 1e-10
        assert np.abs(relative_momentum(p2, p1) + relative_momentum(p1, p2)).max() < 1e-12


def test_relative_momentum_rest_frame():
    kin = Kinematics.for_spec(FERMION_PAIR, PAIR_S)
    n = np.array([0.6, 0.0, 0.8])
    p1, p2 = kin.momenta(n)
    assert np.allclose(relative_direction(p1, p2), n, atol=1e-14)
    assert np.allclose(relative_momentum(p1, p2)[0], 0.0, atol=1e-14)


def test_inverse_com_wigner_is_a_rotation(rng):
    rest = FourMomentum.rest(PAIR_S)
    kin = Kinematics.for_spec(FERMION_PAIR, PAIR_S)
    p1, _ = kin.momenta([0.2, 0.9, -0.4])
    assert np.abs(inverse_com_wigner(rest, p1).matrix - np.eye(2)).max() < 1e-12
    for convention in ("canonical", "helicity"):
        boost = canonical_boost(random_momentum(rng, 4.0, 2.0))
        q1 = apply_lorentz(boost, p1)
        pair = apply_lorentz(boost, kin.pair_momentum())
        w = inverse_com_wigner(pair, q1, convention).matrix
        assert np.abs(w @ w.conj().T - np.eye(2)).max() < 1e-12
        assert abs(np.linalg.det(w) - 1.0) < 1e-12


def test_helicity_to_wigner_matrix(rng):
    pz = FourMomentum.on_shell(1.0, np.array([0.0, 0.0, 2.5]))
    assert np.abs(helicity_to_wigner(1, pz) - np.eye(3)).max() < 1e-14
    for _ in range(10):
        p = random_momentum(rng, 1.0, 3.0)
        m = helicity_to_wigner(0.5, p)
        assert np.abs(m - direction_rotation(p).inverse().matrix).max() < 1e-14
        big = helicity_to_wigner(2, p)
        assert np.abs(big @ big.conj().T - np.eye(5)).max() < 1e-12


def test_angular_general_scalar_slots(rng):
    kin = Kinematics.for_spec(FERMION_PAIR, PAIR_S)
    p1, p2 = kin.momenta(rng.normal(size=3))
    boost = canonical_boost(random_momentum(rng, 4.0, 1.0))
    q1, q2 = apply_lorentz(boost, p1), apply_lorentz(boost, p2)
    table = spin_orbit_general_table(FERMION_PAIR, 1, SpinOrbitChannel(1, 1), 0, q1, q2)
    got = angular_spin_orbit_general(FERMION_PAIR, 1, 1, 1, 0, 0.5, -0.5, q1, q2)
    assert got == pytest.approx(table[0, 1])
    htable = helicity_general_table(FERMION_PAIR, 1, HelicityChannel(0.5, 0.5), 1, q1, q2)
    hgot = angular_helicity_general(FERMION_PAIR, 1, 0.5, 0.5, 1, -0.5, 0.5, q1, q2)
    assert hgot == pytest.approx(htable[1, 0])


def test_helicity_com_pair_frame_covariance(rng):
    """Coupled helicity tables rotate by D^j(u) up to a shared pair-frame z-phase.

    The phase comes from the minimal rotation Rz(phi) Ry(theta) Rz(-phi) of the
    relative direction, not from the per-particle Rz(phi) Ry(theta) frames, so
    this law is a property of the closed forms alone.
    """

    def rho_min(theta, phi):
        rz = lambda a: np.diag([np.exp(-0.5j * a), np.exp(0.5j * a)])
        ry = np.array(
            [
                [np.cos(theta / 2), -np.sin(theta / 2)],
                [np.sin(theta / 2), np.cos(theta / 2)],
            ]
        )
        return rz(phi) @ ry @ rz(-phi)

    for _ in range(6):
        u = random_su2(rng)
        rot3 = spinor_to_lorentz(u)[1:, 1:]
        theta, phi = rng.uniform(0.2, 2.9), rng.uniform(0.0, 2 * np.pi)
        direction = np.array(
            [
                np.sin(theta) * np.cos(phi),
                np.sin(theta) * np.sin(phi),
                np.cos(theta),
            ]
        )
        t_img, p_img = polar_angles((rot3 @ direction)[None, :])
        t_img, p_img = float(t_img[0]), float(p_img[0])
        g = np.linalg.inv(rho_min(t_img, p_img)) @ u @ rho_min(theta, phi)
        assert max(abs(g[0, 1]), abs(g[1, 0])) < 1e-12
        w = g[0, 0] / abs(g[0, 0])
        for j in (HalfInt(0), HalfInt(2)):
            for channel in (HelicityChannel(0.5, 0.5), HelicityChannel(0.5, -0.5)):
                mu = HalfInt(channel.lam1.twice - channel.lam2.twice)
                if abs(mu.twice) > j.twice:
                    continue
                comps = components(j)
                img = np.array(
                    [
                        angular_helicity_com(
                            FERMION_PAIR, j, channel.lam1, channel.lam2, c, t_img, p_img
                        )
                        for c in comps
                    ]
                )
                pre = np.array(
                    [
                        angular_helicity_com(
                            FERMION_PAIR, j, channel.lam1, channel.lam2, c, theta, phi
                        )
                        for c in comps
                    ]
                )
                law = w ** (-mu.twice) * (rep_matrix(j, u) @ pre)
                assert np.abs(img - law).max() < 1e-12
