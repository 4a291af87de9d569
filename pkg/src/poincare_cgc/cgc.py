"""Two-particle channel enumeration and coupling amplitudes.

A pair of massive irreps (mass squared s_i, spin j_i) is coupled to a
total spin j either through an orbital/spin channel (l, s) or through a
helicity channel (lambda1, lambda2). The center-of-momentum amplitudes
here are the matrix elements projecting a two-particle plane-wave pair
at relative direction (theta, phi) onto the coupled state; general-frame
amplitudes follow from them by Wigner rotations of each spin slot.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BelowThreshold, InvalidChannel, MasslessUnsupported
from .halfint import HalfInt, component_index, components, hrange, triangle_rule
from .lorentz import (
    FourMomentum,
    SpinorTransform,
    apply_lorentz,
    direction_rotation,
    polar_angles,
    spinor_to_lorentz,
    standard_boost,
    wigner_rotation,
)
from .su2 import rep_matrix, spherical_harmonic, su2_cgc, wigner_d_small

SCHEMES = ("spin-orbit", "helicity")

_I_POWERS = (1.0, 1.0j, -1.0, -1.0j)


def _check_scheme(scheme: str) -> str:
    if scheme not in SCHEMES:
        raise ValueError(f"scheme must be one of {SCHEMES}, got {scheme!r}")
    return scheme


def _minus_one_to(chi: HalfInt) -> complex:
    """(-1)**chi on the principal branch, exact for half-integers."""
    return _I_POWERS[chi.twice % 4]


@dataclass(frozen=True)
class TwoParticleSpec:
    """Masses (squared) and spins of the two irreps being coupled."""

    s1: float
    s2: float
    j1: HalfInt
    j2: HalfInt

    def __post_init__(self):
        object.__setattr__(self, "s1", float(self.s1))
        object.__setattr__(self, "s2", float(self.s2))
        object.__setattr__(self, "j1", HalfInt.of(self.j1))
        object.__setattr__(self, "j2", HalfInt.of(self.j2))
        if self.s1 <= 0.0 or self.s2 <= 0.0:
            raise MasslessUnsupported("both constituents need positive mass squared")
        if self.j1 < HalfInt(0) or self.j2 < HalfInt(0):
            raise ValueError("spins must be nonnegative")

    @classmethod
    def fermion_pair(cls, s1: float, s2: float | None = None) -> "TwoParticleSpec":
        """Two spin-1/2 constituents, equal masses unless s2 is given."""
        return cls(s1, s1 if s2 is None else s2, HalfInt(1), HalfInt(1))

    @property
    def spin_shape(self) -> tuple[int, int]:
        return (self.j1.twice + 1, self.j2.twice + 1)


@dataclass(frozen=True)
class SpinOrbitChannel:
    """Orbital angular momentum l coupled with total constituent spin s."""

    l: HalfInt
    s: HalfInt

    def __post_init__(self):
        object.__setattr__(self, "l", HalfInt.of(self.l))
        object.__setattr__(self, "s", HalfInt.of(self.s))
        if not self.l.is_integer or self.l < HalfInt(0):
            raise InvalidChannel(f"orbital label must be a nonnegative integer, got {self.l}")
        if self.s < HalfInt(0):
            raise InvalidChannel(f"total spin must be nonnegative, got {self.s}")

    def label(self) -> str:
        return f"l={self.l},s={self.s}"


@dataclass(frozen=True)
class HelicityChannel:
    """Rest-frame helicity labels of the two constituents."""

    lam1: HalfInt
    lam2: HalfInt

    def __post_init__(self):
        object.__setattr__(self, "lam1", HalfInt.of(self.lam1))
        object.__setattr__(self, "lam2", HalfInt.of(self.lam2))

    @property
    def mu(self) -> HalfInt:
        return self.lam1 - self.lam2

    def label(self) -> str:
        return f"lam1={self.lam1},lam2={self.lam2}"


def enumerate_channels(spec: TwoParticleSpec, j, scheme: str = "spin-orbit") -> list:
    """All channels of the scheme for total spin j.

    Orbital/spin channels are ordered by s then l, both ascending; helicity
    channels run over the full component grid, lam1 then lam2, both
    descending. Helicity channels with |lam1 - lam2| > j are listed too;
    their coupling amplitudes vanish identically.
    """
    j = HalfInt.of(j)
    _check_scheme(scheme)
    if scheme == "helicity":
        return [
            HelicityChannel(l1, l2)
            for l1 in components(spec.j1)
            for l2 in components(spec.j2)
        ]
    out = []
    for s in hrange(abs(spec.j1 - spec.j2), spec.j1 + spec.j2):
        lo, hi = abs(j - s), j + s
        if not lo.is_integer:
            continue
        out.extend(SpinOrbitChannel(l, s) for l in hrange(lo, hi))
    return out


def coupling_channels(spec: TwoParticleSpec, j, scheme: str = "spin-orbit") -> list:
    """Channels whose coupling amplitude is not identically zero."""
    j = HalfInt.of(j)
    chans = enumerate_channels(spec, j, scheme)
    if scheme == "helicity":
        return [c for c in chans if abs(c.mu) <= j]
    return chans


def triangle(s, s1, s2) -> float:
    """Symmetric triangle function s^2 + s1^2 + s2^2 - 2(s s1 + s s2 + s1 s2).

    Arguments are sorted first so the value is exactly permutation
    invariant in floating point.
    """
    x, y, z = sorted((float(s), float(s1), float(s2)))
    return x * x + y * y + z * z - 2.0 * (x * y + y * z + z * x)


def _check_above_threshold(s, s1, s2) -> float:
    if s1 <= 0.0 or s2 <= 0.0:
        raise MasslessUnsupported("constituent mass squared must be positive")
    if s <= 0.0 or np.sqrt(s) <= np.sqrt(s1) + np.sqrt(s2):
        raise BelowThreshold(
            f"pair mass sqrt({s}) does not exceed threshold sqrt({s1}) + sqrt({s2})"
        )
    return triangle(s, s1, s2)


def com_momentum(s, s1, s2) -> float:
    """Magnitude of either constituent momentum in the pair rest frame."""
    delta = _check_above_threshold(s, s1, s2)
    return float(np.sqrt(delta / (4.0 * s)))


def com_normalization(s, s1, s2) -> float:
    """Normalization prefactor (sqrt(2)/2) * triangle(s, s1, s2)^(1/4)."""
    delta = _check_above_threshold(s, s1, s2)
    return float(np.sqrt(0.5) * delta**0.25)


@dataclass(frozen=True)
class Kinematics:
    """Two-body kinematics at fixed pair mass squared s."""

    s: float
    s1: float
    s2: float

    def __post_init__(self):
        object.__setattr__(self, "s", float(self.s))
        object.__setattr__(self, "s1", float(self.s1))
        object.__setattr__(self, "s2", float(self.s2))
        _check_above_threshold(self.s, self.s1, self.s2)

    @classmethod
    def for_spec(cls, spec: TwoParticleSpec, s: float) -> "Kinematics":
        return cls(s, spec.s1, spec.s2)

    @property
    def delta(self) -> float:
        return triangle(self.s, self.s1, self.s2)

    @property
    def k(self) -> float:
        return com_momentum(self.s, self.s1, self.s2)

    @property
    def e1(self) -> float:
        return (self.s + self.s1 - self.s2) / (2.0 * np.sqrt(self.s))

    @property
    def e2(self) -> float:
        return (self.s + self.s2 - self.s1) / (2.0 * np.sqrt(self.s))

    def momenta(self, direction) -> tuple[FourMomentum, FourMomentum]:
        """Back-to-back constituent momenta along a rest-frame direction."""
        n = np.asarray(direction, dtype=float)
        n = n / np.linalg.norm(n)
        return (
            FourMomentum(self.e1, self.k * n),
            FourMomentum(self.e2, -self.k * n),
        )

    def pair_momentum(self) -> FourMomentum:
        return FourMomentum.rest(self.s)


def discrete_symmetry_labels(l, s) -> tuple[int, int]:
    """Parity and charge-conjugation signs of a fermion-antifermion pair.

    For two spin-1/2 constituents in the orbital/spin channel (l, s) the
    pair is a parity eigenstate with sign (-1)**(l+1) and, for a neutral
    particle-antiparticle pair, a charge-conjugation eigenstate with sign
    (-1)**(l+s).
    """
    l, s = HalfInt.of(l), HalfInt.of(s)
    if not l.is_integer or l < HalfInt(0):
        raise InvalidChannel(f"orbital label must be a nonnegative integer, got {l}")
    if s not in (HalfInt(0), HalfInt(2)):
        raise InvalidChannel(f"two spin-1/2 constituents couple to s = 0 or 1, got {s}")
    li, si = int(l), int(s)
    return (-1) ** (li + 1), (-1) ** (li + si)


def _check_chi(j, chi) -> tuple[HalfInt, HalfInt]:
    j, chi = HalfInt.of(j), HalfInt.of(chi)
    if (j.twice - chi.twice) % 2 != 0 or abs(chi) > j:
        raise ValueError(f"component {chi} is not valid for spin {j}")
    return j, chi


def spin_orbit_com_table(
    spec: TwoParticleSpec, j, channel: SpinOrbitChannel, chi, theta, phi
) -> np.ndarray:
    """Rest-frame coupling amplitudes of an orbital/spin channel.

    Returns the array A[chi1, chi2] over descending constituent spin
    components, broadcast over theta/phi with the spin axes trailing.
    The amplitude is

        <j1 chi1 j2 chi2 | s s3> <l l3 s s3 | j chi> (-1)**chi Y_{l l3}

    with s3 = chi1 + chi2 and l3 = chi - s3.
    """
    j, chi = _check_chi(j, chi)
    l, s = channel.l, channel.s
    if not (triangle_rule(spec.j1, spec.j2, s) and triangle_rule(l, s, j)):
        raise InvalidChannel(f"channel ({channel.label()}) does not couple to spin {j}")
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    shape = np.broadcast(theta, phi).shape
    out = np.zeros(shape + spec.spin_shape, dtype=complex)
    phase = _minus_one_to(chi)
    for a, chi1 in enumerate(components(spec.j1)):
        for b, chi2 in enumerate(components(spec.j2)):
            s3 = chi1 + chi2
            l3 = chi - s3
            if abs(s3) > s or abs(l3) > l:
                continue
            weight = su2_cgc(s, spec.j1, spec.j2, s3, chi1, chi2) * su2_cgc(
                j, l, s, chi, l3, s3
            )
            if weight == 0.0:
                continue
            out[..., a, b] = weight * phase * spherical_harmonic(l, l3, theta, phi)
    return out


def angular_spin_orbit_com(spec: TwoParticleSpec, j, l, s, chi, chi1, chi2, theta, phi):
    """One rest-frame orbital/spin coupling amplitude.

    The (chi1, chi2) slot of :func:`spin_orbit_com_table` for the channel
    (l, s); scalar angles give a complex scalar, array angles broadcast.
    """
    table = spin_orbit_com_table(spec, j, SpinOrbitChannel(l, s), chi, theta, phi)
    a = component_index(spec.j1, chi1)
    b = component_index(spec.j2, chi2)
    return table[..., a, b]


def helicity_com_scalar(
    spec: TwoParticleSpec, j, channel: HelicityChannel, chi, theta, phi
) -> np.ndarray:
    """Scalar rest-frame amplitude of a helicity channel.

    sqrt((2j+1)/4pi) exp(-i chi phi) d^j_{chi, mu}(theta) exp(+i mu phi)
    with mu = lam1 - lam2; identically zero when |mu| > j.
    """
    j, chi = _check_chi(j, chi)
    if abs(channel.lam1) > spec.j1 or abs(channel.lam2) > spec.j2:
        raise InvalidChannel(f"channel ({channel.label()}) exceeds the constituent spins")
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    shape = np.broadcast(theta, phi).shape
    mu = channel.mu
    if abs(mu) > j:
        return np.zeros(shape, dtype=complex)
    d = wigner_d_small(j, theta)[..., component_index(j, chi), component_index(j, mu)]
    norm = np.sqrt((j.twice + 1.0) / (4.0 * np.pi))
    return norm * np.exp(-1j * float(chi) * phi) * d * np.exp(1j * float(mu) * phi) + np.zeros(shape)


def helicity_com_table(
    spec: TwoParticleSpec, j, channel: HelicityChannel, chi, theta, phi
) -> np.ndarray:
    """Rest-frame helicity amplitudes as an array over helicity slots.

    Same layout as :func:`spin_orbit_com_table` but the trailing axes
    index the constituent helicities (descending); only the slot at the
    channel's (lam1, lam2) is populated.
    """
    scalar = helicity_com_scalar(spec, j, channel, chi, theta, phi)
    out = np.zeros(scalar.shape + spec.spin_shape, dtype=complex)
    a = component_index(spec.j1, channel.lam1)
    b = component_index(spec.j2, channel.lam2)
    out[..., a, b] = scalar
    return out


def angular_helicity_com(spec: TwoParticleSpec, j, lam1, lam2, lam, theta1, phi1):
    """One rest-frame helicity coupling amplitude.

    Amplitude of the (lam1, lam2) channel at coupled component lam, taken
    at the polar angles of the first constituent's momentum.
    """
    return helicity_com_scalar(spec, j, HelicityChannel(lam1, lam2), lam, theta1, phi1)


def _pair_kinematics(p1: FourMomentum, p2: FourMomentum) -> tuple[FourMomentum, float, float, float]:
    s1, s2 = p1.mass2, p2.mass2
    p = p1 + p2
    s = p.mass2
    _check_above_threshold(s, s1, s2)
    return p, s, s1, s2


def relative_momentum(p1: FourMomentum, p2: FourMomentum, convention: str = "canonical") -> np.ndarray:
    """Unit spacelike relative four-vector seen from the pair rest frame.

    The difference p1 - p2, with its component along the pair momentum
    projected out, is carried to the rest frame by the inverse of the
    pair's standard boost (of the given convention) and normalized with
    sqrt(s / triangle). The time component vanishes and the spatial part
    is a unit vector.
    """
    p, s, s1, s2 = _pair_kinematics(p1, p2)
    q = (p1 - p2).as_array() - ((s1 - s2) / s) * p.as_array()
    binv = standard_boost(p, s, convention).inverse()
    e = np.sqrt(s / triangle(s, s1, s2)) * (spinor_to_lorentz(binv.matrix) @ q)
    return e


def relative_direction(p1: FourMomentum, p2: FourMomentum, convention: str = "canonical") -> np.ndarray:
    """Spatial unit vector of :func:`relative_momentum`."""
    return relative_momentum(p1, p2, convention)[1:]


def inverse_com_wigner(
    p: FourMomentum, p_i: FourMomentum, convention: str = "canonical"
) -> SpinorTransform:
    """Spin rotation taking rest-frame constituent labels to frame of p.

    For the pair momentum p and a constituent momentum p_i (both in the
    same frame), this is the little-group element W(b(p), q_i) where q_i
    is p_i carried to the pair rest frame, i.e. the rotation a spin slot
    picks up when the coupled state is boosted out of the rest frame.
    """
    binv = standard_boost(p, None, convention).inverse()
    return wigner_rotation(binv, p_i, convention).inverse()


def _angular_general(spec, j, channel, chi, p1, p2, scheme, com_fn):
    p, s, s1, s2 = _pair_kinematics(p1, p2)
    for name, want, got in (("first", spec.s1, s1), ("second", spec.s2, s2)):
        if abs(want - got) > 1e-6 * max(1.0, abs(want)):
            raise ValueError(f"{name} momentum is off shell for the pair spec: {got} vs {want}")
    convention = "canonical" if scheme == "spin-orbit" else "helicity"
    theta, phi = polar_angles(relative_direction(p1, p2, convention))
    a_com = com_fn(spec, j, channel, chi, theta, phi)
    d1 = rep_matrix(spec.j1, inverse_com_wigner(p, p1, convention).matrix)
    d2 = rep_matrix(spec.j2, inverse_com_wigner(p, p2, convention).matrix)
    return np.einsum("ac,bd,cd->ab", d1, d2, a_com)


def spin_orbit_general_table(
    spec: TwoParticleSpec, j, channel: SpinOrbitChannel, chi, p1: FourMomentum, p2: FourMomentum
) -> np.ndarray:
    """Coupling amplitudes of an orbital/spin channel in a general frame.

    chi labels the coupled spin component along the rest-frame z axis
    reached by the inverse canonical boost of p1 + p2. The returned array
    runs over the constituents' canonical spin components in the frame
    where p1 and p2 are given.
    """
    return _angular_general(spec, j, channel, chi, p1, p2, "spin-orbit", spin_orbit_com_table)


def angular_spin_orbit_general(
    spec: TwoParticleSpec, j, l, s, chi, chi1, chi2, p1: FourMomentum, p2: FourMomentum
) -> complex:
    """One orbital/spin coupling amplitude in a general frame.

    The (chi1, chi2) slot of :func:`spin_orbit_general_table`, where chi1
    and chi2 are canonical spin components in the frame of p1 and p2.
    """
    table = spin_orbit_general_table(spec, j, SpinOrbitChannel(l, s), chi, p1, p2)
    return table[component_index(spec.j1, chi1), component_index(spec.j2, chi2)]


def helicity_general_table(
    spec: TwoParticleSpec, j, channel: HelicityChannel, chi, p1: FourMomentum, p2: FourMomentum
) -> np.ndarray:
    """Coupling amplitudes of a helicity channel in a general frame.

    The returned array runs over the constituents' helicity components in
    the frame where p1 and p2 are given; chi is relative to the rest frame
    reached by the inverse helicity boost of p1 + p2.
    """
    return _angular_general(spec, j, channel, chi, p1, p2, "helicity", helicity_com_table)


def angular_helicity_general(
    spec: TwoParticleSpec, j, lam1t, lam2t, lam, lam1, lam2, p1: FourMomentum, p2: FourMomentum
) -> complex:
    """One helicity coupling amplitude in a general frame.

    (lam1t, lam2t) label the channel (rest-frame constituent helicities);
    (lam1, lam2) pick the frame helicity slot of :func:`helicity_general_table`.
    """
    table = helicity_general_table(spec, j, HelicityChannel(lam1t, lam2t), chi=lam, p1=p1, p2=p2)
    return table[component_index(spec.j1, lam1), component_index(spec.j2, lam2)]


def helicity_to_wigner(j, p) -> np.ndarray:
    """Matrix converting helicity components at momentum p to canonical ones.

    Returns M = D^j(rho(p)^-1) where rho(p) is the rotation carrying +z to
    the direction of p. A helicity amplitude vector c_h (descending
    components) maps to the canonical amplitude vector c_w through
    c_w = M† c_h, and back through c_h = M c_w.
    """
    j = HalfInt.of(j)
    return rep_matrix(j, direction_rotation(p).inverse().matrix)
