"""Two-particle states on a center-of-mass sphere quadrature.

Discretizes the closed-form angular amplitudes of :mod:`poincare_cgc.cgc`
on a Gauss-Legendre x trapezoid product grid, takes quadrature inner
products, applies rotations exactly through preimage evaluation, and
decomposes spin-correlated product states into partial waves.

All states live on a single slice of fixed pair invariant mass squared s;
the slices decouple, so nothing here couples different values of s.
"""

from __future__ import annotations

import dataclasses
import json
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .cgc import (
    HelicityChannel,
    Kinematics,
    SpinOrbitChannel,
    TwoParticleSpec,
    _check_above_threshold,
    _check_scheme,
    com_normalization,
    coupling_channels,
    helicity_com_table,
    helicity_to_wigner,
    spin_orbit_com_table,
)
from .errors import GridMismatch, GridTooCoarse, InvalidChannel
from .halfint import HalfInt, components
from .lorentz import _rotation_matrix, polar_angles, require_su2, spinor_to_lorentz
from .su2 import rep_matrix, spherical_harmonic, wigner_d_small

# Quadrature Gram diagonal of the basis states as built, measured once on
# 32x64 and 64x128 grids (it agrees with unity at the 1e-14 level for both
# schemes and is channel-independent). Kept as a named constant so the
# normalization is a documented measurement rather than an assumption.
MEASURED_GRAM_DIAGONAL = 1.0

BELL_LABELS = ("psi00", "psi01", "psi10", "psi11")


@dataclass(frozen=True, eq=False)
class QuadratureGrid:
    """Product quadrature on the unit sphere.

    Gauss-Legendre nodes in cos(theta) crossed with a uniform trapezoid
    rule in phi, flattened in theta-major order. Weights sum to 4 pi and
    the rule integrates products of spherical harmonics exactly up to
    l = n_theta - 1 provided n_phi exceeds twice that degree.
    """

    n_theta: int
    n_phi: int
    theta: np.ndarray
    phi: np.ndarray
    weights: np.ndarray

    @property
    def size(self) -> int:
        return self.theta.size

    @property
    def nodes(self) -> np.ndarray:
        """(N, 3) array of (theta, phi, weight) rows."""
        return np.stack([self.theta, self.phi, self.weights], axis=-1)

    @property
    def directions(self) -> np.ndarray:
        """(N, 3) array of unit vectors at the nodes."""
        st = np.sin(self.theta)
        return np.stack(
            [st * np.cos(self.phi), st * np.sin(self.phi), np.cos(self.theta)],
            axis=-1,
        )

    def matches(self, other: "QuadratureGrid") -> bool:
        return self.n_theta == other.n_theta and self.n_phi == other.n_phi


def build_grid(n_theta: int, n_phi: int) -> QuadratureGrid:
    """Build the sphere quadrature with n_theta polar and n_phi azimuthal nodes."""
    n_theta, n_phi = int(n_theta), int(n_phi)
    if n_theta < 2 or n_phi < 4:
        raise GridTooCoarse(
            f"grid {n_theta}x{n_phi} is degenerate; need n_theta >= 2 and n_phi >= 4"
        )
    x, wx = np.polynomial.legendre.leggauss(n_theta)
    theta = np.arccos(x[::-1])
    phi = np.arange(n_phi) * (2.0 * np.pi / n_phi)
    th, ph = np.meshgrid(theta, phi, indexing="ij")
    w = np.broadcast_to((wx[::-1] * (2.0 * np.pi / n_phi))[:, None], th.shape)
    return QuadratureGrid(n_theta, n_phi, th.ravel(), ph.ravel(), w.ravel().copy())


@dataclass(frozen=True, eq=False)
class ComBasisState:
    """One partial-wave basis state sampled on a sphere quadrature.

    amplitudes[node, i1, i2] is the angular amplitude at the node for the
    spin slot (chi1, chi2); slot indices run over components in descending
    order. Spin-orbit slots are fixed-axis components, helicity slots are
    components along each particle's own momentum. norm_prefactor is the
    kinematic constant sqrt(2)/2 * Delta(s, s1, s2)**(1/4) that multiplies
    the angular table in the full composite state; it is carried as a label
    and never folded into the amplitudes.

    evaluator, when present, maps angle arrays to the same amplitude table
    at arbitrary points; it is what makes rotations exact for states built
    from closed forms. States loaded from serialized tables have none.
    """

    grid: QuadratureGrid
    spec: TwoParticleSpec
    s: float
    scheme: str
    j: HalfInt
    channel: object
    component: HalfInt
    amplitudes: np.ndarray
    norm_prefactor: float
    evaluator: Callable | None = field(default=None, repr=False)


def _angular_function(scheme: str):
    return spin_orbit_com_table if scheme == "spin-orbit" else helicity_com_table


def build_com_basis_state(grid, spec, s, j, channel, component) -> ComBasisState:
    """Sample one partial-wave channel's angular amplitude on a grid.

    The scheme is inferred from the channel label type. The channel must
    couple to the requested total spin j, and s must lie above the
    two-particle threshold.
    """
    j = HalfInt.of(j)
    component = HalfInt.of(component)
    _check_above_threshold(s, spec.s1, spec.s2)
    if isinstance(channel, SpinOrbitChannel):
        scheme = "spin-orbit"
    elif isinstance(channel, HelicityChannel):
        scheme = "helicity"
    else:
        raise InvalidChannel(f"not a channel label: {channel!r}")
    if channel not in coupling_channels(spec, j, scheme):
        raise InvalidChannel(f"channel {channel.label()} does not couple to j={j}")
    fn = _angular_function(scheme)

    def evaluate(theta, phi):
        return fn(spec, j, channel, component, theta, phi)

    return ComBasisState(
        grid=grid,
        spec=spec,
        s=float(s),
        scheme=scheme,
        j=j,
        channel=channel,
        component=component,
        amplitudes=evaluate(grid.theta, grid.phi),
        norm_prefactor=com_normalization(s, spec.s1, spec.s2),
        evaluator=evaluate,
    )


def all_basis_states(grid, spec, s, j_max, scheme) -> list[ComBasisState]:
    """Every basis state with total spin j <= j_max, in deterministic order.

    Order: j ascending, then channel enumeration order, then components
    descending. This is also the row order used by the decomposition and
    the command-line emitters.
    """
    scheme = _check_scheme(scheme)
    out = []
    for j in _total_j_values(spec, HalfInt.of(j_max)):
        for channel in coupling_channels(spec, j, scheme):
            for chi in components(j):
                out.append(build_com_basis_state(grid, spec, s, j, channel, chi))
    return out


def inner_product(a: ComBasisState, b: ComBasisState) -> complex:
    """Quadrature inner product sum_n w_n sum_slots conj(a) b.

    Both states must live on matching grids (GridMismatch otherwise), at
    the same s, and in the same scheme (ValueError otherwise).
    """
    if not a.grid.matches(b.grid):
        raise GridMismatch("states live on different quadrature grids")
    if a.s != b.s:
        raise ValueError("states live at different invariant masses")
    if a.scheme != b.scheme:
        raise ValueError("states carry slots in different schemes")
    return complex(
        np.einsum("n,ncd,ncd->", a.grid.weights, a.amplitudes.conj(), b.amplitudes)
    )


def gram_matrix(states) -> np.ndarray:
    """Hermitian matrix of pairwise inner products."""
    states = list(states)
    out = np.empty((len(states), len(states)), dtype=complex)
    for i, a in enumerate(states):
        for k in range(i, len(states)):
            val = inner_product(a, states[k])
            out[i, k] = val
            out[k, i] = np.conj(val)
    return out


def _antipode(theta, phi):
    return np.pi - theta, np.mod(np.asarray(phi, dtype=float) + np.pi, 2.0 * np.pi)


def _zrot_diag(j, w):
    """Diagonal of the spin-j representation of a z-axis rotation.

    w is the upper-left entry of the SU(2) matrix; entry m of the result
    is w**(2m) with components in descending order.
    """
    tw = np.array([m.twice for m in components(HalfInt.of(j))])
    return np.power(np.asarray(w)[..., None], tw)


def _little_group_phase(u, theta_img, phi_img, theta_pre, phi_pre):
    """Upper-left entry of rho(img)^-1 u rho(pre) for a rotation u.

    When u carries the pre direction to the img direction this product is
    a z-axis rotation (it fixes the z axis), so its diagonal determines the
    helicity-slot mixing. The off-diagonal is checked, not assumed.
    """
    r_img = _rotation_matrix(theta_img, phi_img)
    r_pre = _rotation_matrix(theta_pre, phi_pre)
    w = np.einsum("...ba,bc,...cd->...ad", r_img.conj(), u, r_pre)
    off = float(np.max(np.abs(w[..., 0, 1])) + np.max(np.abs(w[..., 1, 0])))
    if off > 1e-8:
        raise ValueError(
            f"little-group element is not a z-rotation (off-diagonal {off:.2e}); "
            "the rotation does not map the given directions onto each other"
        )
    val = w[..., 0, 0]
    return val / np.abs(val)


def _preimage_angles(theta, phi, rot3):
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    st = np.sin(theta)
    dirs = np.stack(
        [st * np.cos(phi), st * np.sin(phi), np.cos(theta) * np.ones_like(phi)],
        axis=-1,
    )
    return polar_angles(dirs @ rot3)


def _rotated_evaluator(state: ComBasisState, u: np.ndarray) -> Callable:
    """Exact evaluator for the rotated state.

    The rotated amplitude at direction n is the original amplitude at the
    preimage direction u^-1 n, with each particle's spin slots mixed by its
    little-group element in the state's scheme: the constant matrix u itself
    for fixed-axis (spin-orbit) slots, a direction-dependent z-rotation
    phase for helicity slots.
    """
    rot3 = spinor_to_lorentz(u)[1:, 1:]
    base = state.evaluator
    spec = state.spec
    if state.scheme == "spin-orbit":
        d1 = rep_matrix(spec.j1, u)
        d2 = rep_matrix(spec.j2, u)

        def evaluate(theta, phi):
            thp, php = _preimage_angles(theta, phi, rot3)
            return np.einsum("ac,bd,...cd->...ab", d1, d2, base(thp, php))

    else:

        def evaluate(theta, phi):
            theta = np.asarray(theta, dtype=float)
            phi = np.asarray(phi, dtype=float)
            thp, php = _preimage_angles(theta, phi, rot3)
            amp = base(thp, php)
            d1 = _zrot_diag(spec.j1, _little_group_phase(u, theta, phi, thp, php))
            t2i, p2i = _antipode(theta, phi)
            t2p, p2p = _antipode(thp, php)
            d2 = _zrot_diag(spec.j2, _little_group_phase(u, t2i, p2i, t2p, p2p))
            return amp * d1[..., :, None] * d2[..., None, :]

    return evaluate


def _band_limited_evaluator(grid: QuadratureGrid, amplitudes: np.ndarray) -> Callable:
    """Interpolating evaluator from a spherical-harmonic transform.

    The stored table is projected onto scalar harmonics with l <= n_theta - 1
    slot by slot; evaluation sums the truncated series. Exact for tables
    band-limited below the grid resolution, an approximation otherwise.
    """
    table = _harmonic_table(grid.n_theta - 1, grid.theta, grid.phi)
    coeffs = np.einsum("kn,n,n...->k...", table.conj(), grid.weights, amplitudes)
    spin_shape = amplitudes.shape[1:]

    def evaluate(theta, phi):
        th, ph = np.broadcast_arrays(np.asarray(theta, float), np.asarray(phi, float))
        point = _harmonic_table(grid.n_theta - 1, th.ravel(), ph.ravel())
        out = np.einsum("km,k...->m...", point, coeffs)
        return out.reshape(th.shape + spin_shape)

    return evaluate


def _harmonic_table(lmax: int, theta, phi) -> np.ndarray:
    """Rows of spherical harmonics, l ascending and m descending within l."""
    rows = []
    for l in range(lmax + 1):
        for m in components(HalfInt(2 * l)):
            rows.append(spherical_harmonic(HalfInt(2 * l), m, theta, phi))
    return np.array(rows)


def apply_rotation(state: ComBasisState, u) -> ComBasisState:
    """Rotate a grid state.

    Node directions map forward under the rotation; the new table is built
    by evaluating the state at preimage nodes, so no interpolation error
    enters while a closed-form evaluator is available. Each particle's spin
    slots are mixed by its little-group representation matrix in the
    state's scheme. States without an evaluator (loaded tables) fall back
    to spherical-harmonic interpolation truncated at l = n_theta - 1.

    Helicity little-group elements are evaluated from the node angle labels
    in exact arithmetic, so the azimuth branch at the phi = 0 seam (where
    the SU(2) half-angle flips sign) is deterministic; recomputing them
    from rounded momentum vectors can pick the other branch there.

    Only rotations are accepted: they preserve the fixed-s sphere the
    states live on. Anything outside SU(2) raises NotARotation.
    """
    u = require_su2(u)
    if state.evaluator is None:
        state = dataclasses.replace(
            state, evaluator=_band_limited_evaluator(state.grid, state.amplitudes)
        )
    evaluate = _rotated_evaluator(state, u)
    return dataclasses.replace(
        state,
        amplitudes=evaluate(state.grid.theta, state.grid.phi),
        evaluator=evaluate,
    )


def convert_slots_to_canonical(state: ComBasisState) -> ComBasisState:
    """Re-express a helicity-scheme state's spin slots as fixed-axis components.

    Helicity components along a momentum are carried to fixed-axis
    components by the inverse direction rotation of that momentum, applied
    node by node to each particle (the second particle's momentum points at
    the antipode of the node). The result carries scheme "spin-orbit" so it
    can be compared against spin-orbit basis states; its channel label is
    kept from the source state.
    """
    if state.scheme != "helicity":
        raise ValueError("slot conversion applies to helicity-scheme states")
    th2, ph2 = _antipode(state.grid.theta, state.grid.phi)
    m1 = _direction_rep_inverse(state.spec.j1, state.grid.theta, state.grid.phi)
    m2 = _direction_rep_inverse(state.spec.j2, th2, ph2)
    amps = np.einsum("nca,ndb,ncd->nab", m1.conj(), m2.conj(), state.amplitudes)
    return dataclasses.replace(
        state, scheme="spin-orbit", amplitudes=amps, evaluator=None
    )


def _direction_rep_inverse(j, theta, phi):
    """Spin-j matrix of the inverse direction rotation, vectorized over angles.

    rho(theta, phi) = Rz(phi) Ry(theta), so the inverse has Euler form
    Ry(-theta) Rz(-phi) and matrix d^j_{m m'}(-theta) e^{i m' phi}.
    """
    j = HalfInt.of(j)
    d = wigner_d_small(j, -np.asarray(theta, dtype=float))
    tw = np.array([m.twice for m in components(j)])
    return d * np.exp(0.5j * np.asarray(phi, dtype=float)[..., None, None] * tw)


@dataclass(frozen=True, eq=False)
class DeltaProductState:
    """Product state localized at a single relative direction.

    coefficients[i1, i2] weights the pair with fixed-axis spin components
    (chi1, chi2), slot indices descending; the table must be normalized to
    sum |c|^2 = 1.
    """

    spec: TwoParticleSpec
    theta: float
    phi: float
    coefficients: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coefficients, dtype=complex)
        if c.shape != self.spec.spin_shape:
            raise ValueError(f"coefficient table must have shape {self.spec.spin_shape}")
        if abs(float(np.sum(np.abs(c) ** 2)) - 1.0) > 1e-8:
            raise ValueError("delta-state coefficients must satisfy sum |c|^2 = 1")
        object.__setattr__(self, "coefficients", c)
        object.__setattr__(self, "theta", float(self.theta))
        object.__setattr__(self, "phi", float(self.phi))


@dataclass(frozen=True, eq=False)
class GridProductState:
    """Product state sampled on a quadrature grid.

    amplitudes[node, i1, i2] with slot indices descending; the slots are
    interpreted in the named scheme's frames (fixed-axis components for
    "spin-orbit", momentum-local components for "helicity").
    """

    grid: QuadratureGrid
    spec: TwoParticleSpec
    amplitudes: np.ndarray
    scheme: str = "spin-orbit"

    def __post_init__(self):
        _check_scheme(self.scheme)
        amps = np.asarray(self.amplitudes, dtype=complex)
        want = (self.grid.size,) + self.spec.spin_shape
        if amps.shape != want:
            raise ValueError(f"amplitude table must have shape {want}")
        object.__setattr__(self, "amplitudes", amps)

    def norm2(self) -> float:
        """Quadrature norm squared."""
        return float(np.einsum("n,ncd->", self.grid.weights, np.abs(self.amplitudes) ** 2))


_BELL_TABLES = {
    "psi00": np.array([[1.0, 0.0], [0.0, 1.0]]),
    "psi01": np.array([[0.0, 1.0], [1.0, 0.0]]),
    "psi10": np.array([[1.0, 0.0], [0.0, -1.0]]),
    "psi11": np.array([[0.0, 1.0], [-1.0, 0.0]]),
}


def bell_state(label, theta=0.0, phi=0.0, spec=None) -> DeltaProductState:
    """One of the four maximally spin-correlated spin-1/2 product states.

    Slot 0 is component +1/2. psi00 and psi10 are the symmetric and
    antisymmetric aligned combinations (up up +/- down down)/sqrt(2);
    psi01 and psi11 are the anti-aligned ones (up down +/- down up)/sqrt(2),
    psi11 being the rotationally invariant singlet.
    """
    if spec is None:
        spec = TwoParticleSpec.fermion_pair(1.0)
    if spec.spin_shape != (2, 2):
        raise ValueError("spin-correlated pair labels need a spin-1/2 pair")
    try:
        table = _BELL_TABLES[label]
    except KeyError:
        raise ValueError(
            f"unknown product-state label {label!r}; expected one of {BELL_LABELS}"
        ) from None
    return DeltaProductState(
        spec=spec, theta=theta, phi=phi,
        coefficients=table.astype(complex) / math.sqrt(2.0),
    )


@dataclass(frozen=True)
class DecompositionEntry:
    j: HalfInt
    channel: object
    component: HalfInt
    coefficient: complex


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Partial-wave coefficient table of a product state.

    entries are ordered j ascending, channel enumeration order, components
    descending. psi_norm2 is the quadrature norm of the input (inf for
    delta-localized states, whose norm is distributional); the truncation
    residual psi_norm2 - coeff_norm2 is reported, never raised as an error.
    """

    scheme: str
    s: float
    j_max: HalfInt
    entries: tuple
    psi_norm2: float
    coeff_norm2: float
    truncation_residual: float


def _total_j_values(spec: TwoParticleSpec, j_max: HalfInt) -> list[HalfInt]:
    start = (spec.j1.twice + spec.j2.twice) % 2
    return [HalfInt(t) for t in range(start, j_max.twice + 1, 2)]


def _delta_slots_to_helicity(psi: DeltaProductState, spec, s) -> np.ndarray:
    """Fixed-axis spin slots re-expressed in helicity frames at the state's direction."""
    kin = Kinematics.for_spec(spec, float(s))
    st = math.sin(psi.theta)
    direction = np.array(
        [st * math.cos(psi.phi), st * math.sin(psi.phi), math.cos(psi.theta)]
    )
    p1, p2 = kin.momenta(direction)
    m1 = helicity_to_wigner(spec.j1, p1)
    m2 = helicity_to_wigner(spec.j2, p2)
    return np.einsum("ac,bd,cd->ab", m1, m2, psi.coefficients)


def decompose_product_state(psi, spec, s, j_max, scheme="spin-orbit") -> Decomposition:
    """Partial-wave coefficients of a product state, for every j <= j_max.

    Each coefficient is the overlap of the corresponding basis amplitude
    with the input: a pointwise conjugated-amplitude contraction for
    delta-localized states, a quadrature inner product for grid states.
    Delta-state spin slots are fixed-axis components and are converted to
    the local helicity frames first when decomposing in the helicity
    scheme; grid states must already carry slots in the requested scheme.
    """
    scheme = _check_scheme(scheme)
    j_max = HalfInt.of(j_max)
    _check_above_threshold(s, spec.s1, spec.s2)
    fn = _angular_function(scheme)
    if isinstance(psi, DeltaProductState):
        slots = psi.coefficients
        if scheme == "helicity":
            slots = _delta_slots_to_helicity(psi, spec, s)

        def coefficient(j, channel, chi):
            amp = fn(spec, j, channel, chi, psi.theta, psi.phi)
            return complex(np.sum(amp.conj() * slots))

        psi_norm2 = math.inf
    elif isinstance(psi, GridProductState):
        if psi.scheme != scheme:
            raise ValueError(
                f"grid state carries {psi.scheme!r} slots; cannot decompose in {scheme!r}"
            )
        grid = psi.grid

        def coefficient(j, channel, chi):
            amp = fn(spec, j, channel, chi, grid.theta, grid.phi)
            return complex(
                np.einsum("n,ncd,ncd->", grid.weights, amp.conj(), psi.amplitudes)
            )

        psi_norm2 = psi.norm2()
    else:
        raise ValueError(f"not a product state: {psi!r}")

    entries = []
    for j in _total_j_values(spec, j_max):
        for channel in coupling_channels(spec, j, scheme):
            for chi in components(j):
                entries.append(
                    DecompositionEntry(j, channel, chi, coefficient(j, channel, chi))
                )
    coeff_norm2 = float(sum(abs(e.coefficient) ** 2 for e in entries))
    residual = math.inf if math.isinf(psi_norm2) else psi_norm2 - coeff_norm2
    return Decomposition(
        scheme=scheme,
        s=float(s),
        j_max=j_max,
        entries=tuple(entries),
        psi_norm2=psi_norm2,
        coeff_norm2=coeff_norm2,
        truncation_residual=residual,
    )


def reconstruct(decomposition: Decomposition, grid: QuadratureGrid,
                spec: TwoParticleSpec) -> GridProductState:
    """Sum coefficient times basis amplitude over all entries of a decomposition."""
    fn = _angular_function(decomposition.scheme)
    total = np.zeros((grid.size,) + spec.spin_shape, dtype=complex)
    for e in decomposition.entries:
        total += e.coefficient * fn(spec, e.j, e.channel, e.component, grid.theta, grid.phi)
    return GridProductState(grid=grid, spec=spec, amplitudes=total,
                            scheme=decomposition.scheme)


def state_to_json(state: ComBasisState) -> str:
    """Serialize a grid state.

    Schema: {scheme, s, j, eta, component, grid: {n_theta, n_phi},
    amplitudes: [[re, im], ...]} with amplitudes flattened in node-major,
    chi1-then-chi2-minor order (C-order raveling of the stored table).
    eta holds the degeneracy pair: (l, s) for spin-orbit channels,
    (lambda1, lambda2) for helicity channels. Half-integers are stored as
    exact binary floats, so the text round-trips bit-exactly.
    """
    if isinstance(state.channel, SpinOrbitChannel):
        eta = [float(state.channel.l), float(state.channel.s)]
    else:
        eta = [float(state.channel.lam1), float(state.channel.lam2)]
    flat = state.amplitudes.ravel()
    payload = {
        "scheme": state.scheme,
        "s": float(state.s),
        "j": float(state.j),
        "eta": eta,
        "component": float(state.component),
        "grid": {"n_theta": state.grid.n_theta, "n_phi": state.grid.n_phi},
        "amplitudes": [[float(z.real), float(z.imag)] for z in flat],
    }
    return json.dumps(payload)


def state_from_json(text: str, spec: TwoParticleSpec) -> ComBasisState:
    """Rebuild a grid state from its JSON form.

    The schema does not carry the particle spins or masses, so the matching
    spec must be supplied. Loaded states carry the stored table verbatim
    and no closed-form evaluator; rotating them uses spherical-harmonic
    interpolation.
    """
    data = json.loads(text)
    scheme = _check_scheme(data["scheme"])
    grid = build_grid(int(data["grid"]["n_theta"]), int(data["grid"]["n_phi"]))
    eta = data["eta"]
    if scheme == "spin-orbit":
        channel = SpinOrbitChannel(HalfInt.of(eta[0]), HalfInt.of(eta[1]))
    else:
        channel = HelicityChannel(HalfInt.of(eta[0]), HalfInt.of(eta[1]))
    s = float(data["s"])
    flat = np.array([complex(re, im) for re, im in data["amplitudes"]])
    want = (grid.size,) + spec.spin_shape
    if flat.size != math.prod(want):
        raise ValueError(
            f"amplitude list has {flat.size} entries; grid and spins require {math.prod(want)}"
        )
    return ComBasisState(
        grid=grid,
        spec=spec,
        s=s,
        scheme=scheme,
        j=HalfInt.of(data["j"]),
        channel=channel,
        component=HalfInt.of(data["component"]),
        amplitudes=flat.reshape(want),
        norm_prefactor=com_normalization(s, spec.s1, spec.s2),
        evaluator=None,
    )
