"""SU(2) representation matrices, Clebsch-Gordan coefficients and
spherical harmonics in the Condon-Shortley convention.

Representation rows and columns are ordered by descending weight,
m = +j, j-1, ..., -j, matching :func:`poincare_cgc.halfint.components`.
"""

from __future__ import annotations

import numpy as np
from scipy.special import lpmv

from .errors import InvalidOrbitalLabel, NotARotation
from .halfint import HalfInt, components, triangle_rule
from .lorentz import require_su2

_MAX_J = HalfInt(20)

_Factlist = [1.0]


def _calc_factlist(nn):
    """Grow the cached factorial table through nn! and return it."""
    if nn >= len(_Factlist):
        for ii in range(len(_Factlist), nn + 1):
            _Factlist.append(_Factlist[ii - 1] * ii)
    return _Factlist[: nn + 1]


def _fact(n):
    if n < 0:
        raise ValueError("factorial of a negative number")
    _calc_factlist(int(n))
    return _Factlist[int(n)]


def _check_j(j) -> HalfInt:
    j = HalfInt.of(j)
    if j < HalfInt(0):
        raise ValueError(f"spin must be nonnegative, got {j}")
    if j > _MAX_J:
        raise ValueError(f"spin {j} exceeds the supported maximum {_MAX_J}")
    return j


def _d_entry(tj, tmp, tm, beta):
    """d^j_{m' m}(beta) from the factorial sum, vectorized over beta.

    tj, tmp, tm are twice j, m', m as ints.
    """
    beta = np.asarray(beta, dtype=float)
    c, s = np.cos(beta / 2.0), np.sin(beta / 2.0)
    jpm, jmm = (tj + tm) // 2, (tj - tm) // 2
    jpmp, jmmp = (tj + tmp) // 2, (tj - tmp) // 2
    dm = (tmp - tm) // 2
    pref = np.sqrt(_fact(jpmp) * _fact(jmmp) * _fact(jpm) * _fact(jmm))
    total = np.zeros_like(beta)
    for k in range(max(0, -dm), min(jpm, jmmp) + 1):
        num = (-1.0) ** (dm + k) * c ** (jpm + jmmp - 2 * k) * s ** (dm + 2 * k)
        den = _fact(jpm - k) * _fact(k) * _fact(dm + k) * _fact(jmmp - k)
        total = total + num / den
    return pref * total


def wigner_d_small(j, beta):
    """Real rotation matrix d^j(beta) about the y axis.

    Rows and columns run over m = +j ... -j. beta may be a scalar or an
    array; the matrix axes are the trailing two.
    """
    j = _check_j(j)
    beta = np.asarray(beta, dtype=float)
    ms = [m.twice for m in components(j)]
    out = np.empty(beta.shape + (len(ms), len(ms)), dtype=float)
    for a, tmp in enumerate(ms):
        for b, tm in enumerate(ms):
            out[..., a, b] = _d_entry(j.twice, tmp, tm, beta)
    return out


def euler_zyz(u) -> tuple[float, float, float]:
    """Euler angles (alpha, beta, gamma) with u = Rz(alpha) Ry(beta) Rz(gamma).

    beta lies in [0, pi] and gamma in [0, 2pi); alpha ranges over [0, 4pi)
    so that the decomposition covers both sheets of SU(2) exactly.
    """
    u = require_su2(u)
    beta = 2.0 * np.arctan2(abs(u[1, 0]), abs(u[0, 0]))
    if abs(u[0, 0]) < 1e-12:
        alpha = float(np.mod(2.0 * np.angle(u[1, 0]), 4.0 * np.pi))
        gamma = 0.0
    elif abs(u[1, 0]) < 1e-12:
        alpha = float(np.mod(-2.0 * np.angle(u[0, 0]), 4.0 * np.pi))
        gamma = 0.0
    else:
        alpha = float(np.mod(-np.angle(u[0, 0]) + np.angle(u[1, 0]), 2.0 * np.pi))
        gamma = float(np.mod(-np.angle(u[0, 0]) - np.angle(u[1, 0]), 2.0 * np.pi))
    rebuilt = _euler_su2(alpha, beta, gamma)
    if np.max(np.abs(rebuilt - u)) > np.max(np.abs(rebuilt + u)):
        alpha = float(np.mod(alpha + 2.0 * np.pi, 4.0 * np.pi))
        rebuilt = -rebuilt
    if np.max(np.abs(rebuilt - u)) > 1e-9:
        raise NotARotation("Euler factorization failed to reproduce the input")
    return float(alpha), float(beta), float(gamma)


def _euler_su2(alpha, beta, gamma):
    za = np.array([[np.exp(-0.5j * alpha), 0.0], [0.0, np.exp(0.5j * alpha)]])
    c, s = np.cos(beta / 2.0), np.sin(beta / 2.0)
    yb = np.array([[c, -s], [s, c]])
    zg = np.array([[np.exp(-0.5j * gamma), 0.0], [0.0, np.exp(0.5j * gamma)]])
    return za @ yb @ zg


def rep_matrix(j, u) -> np.ndarray:
    """Spin-j representation matrix D^j(u) of an SU(2) element.

    Computed through the zyz Euler decomposition,
    D^j_{m'm} = exp(-i alpha m') d^j_{m'm}(beta) exp(-i gamma m),
    which respects the double cover: D^{1/2}(u) = u exactly.
    """
    j = _check_j(j)
    alpha, beta, gamma = euler_zyz(u)
    ms = np.array([float(m) for m in components(j)])
    d = wigner_d_small(j, beta)
    return np.exp(-1j * alpha * ms)[:, None] * d * np.exp(-1j * gamma * ms)[None, :]


def su2_cgc(j, j1, j2, chi, chi1, chi2) -> float:
    """Clebsch-Gordan coefficient <j1 chi1 j2 chi2 | j chi> (Condon-Shortley).

    The coupled labels come first. Invalid couplings return 0.0: component
    sums that do not match, triangle-rule failures, components that exceed
    or are incompatible with their spin. Spins must still be valid
    half-integers (ValueError otherwise).
    """
    j1, j2, j = HalfInt.of(j1), HalfInt.of(j2), HalfInt.of(j)
    m1, m2, m = HalfInt.of(chi1), HalfInt.of(chi2), HalfInt.of(chi)
    for jj in (j1, j2, j):
        _check_j(jj)
    for jj, mm in ((j1, m1), (j2, m2), (j, m)):
        if (jj.twice - mm.twice) % 2 != 0 or abs(mm) > jj:
            return 0.0
    if m1 + m2 != m or not triangle_rule(j1, j2, j):
        return 0.0
    tj1, tj2, tj = j1.twice, j2.twice, j.twice
    tm1, tm2, tm = m1.twice, m2.twice, m.twice
    pref = np.sqrt(
        (tj + 1.0)
        * _fact((tj + tj1 - tj2) // 2)
        * _fact((tj - tj1 + tj2) // 2)
        * _fact((tj1 + tj2 - tj) // 2)
        / _fact((tj1 + tj2 + tj) // 2 + 1)
        * _fact((tj + tm) // 2)
        * _fact((tj - tm) // 2)
        * _fact((tj1 - tm1) // 2)
        * _fact((tj1 + tm1) // 2)
        * _fact((tj2 - tm2) // 2)
        * _fact((tj2 + tm2) // 2)
    )
    kmin = max(0, (tj2 - tj - tm1) // 2, (tj1 + tm2 - tj) // 2)
    kmax = min((tj1 + tj2 - tj) // 2, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
    total = 0.0
    for k in range(kmin, kmax + 1):
        den = (
            _fact(k)
            * _fact((tj1 + tj2 - tj) // 2 - k)
            * _fact((tj1 - tm1) // 2 - k)
            * _fact((tj2 + tm2) // 2 - k)
            * _fact((tj - tj2 + tm1) // 2 + k)
            * _fact((tj - tj1 - tm2) // 2 + k)
        )
        total += (-1.0) ** k / den
    return float(pref * total)


def spherical_harmonic(l, m, theta, phi):
    """Spherical harmonic Y_{l m}(theta, phi), Condon-Shortley phase.

    l must be a nonnegative integer spin; m with |m| > l gives 0. theta and
    phi broadcast as arrays.
    """
    l, m = HalfInt.of(l), HalfInt.of(m)
    if not l.is_integer or l < HalfInt(0):
        raise InvalidOrbitalLabel(f"orbital label must be a nonnegative integer, got {l}")
    if not m.is_integer:
        raise InvalidOrbitalLabel(f"orbital component must be an integer, got {m}")
    if int(l) > 85:
        raise InvalidOrbitalLabel(f"orbital label {l} overflows the float factorial table")
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    li, mi = int(l), int(m)
    if abs(mi) > li:
        return np.zeros(np.broadcast(theta, phi).shape)
    if mi < 0:
        return (-1.0) ** (-mi) * np.conj(spherical_harmonic(l, -mi, theta, phi))
    norm = np.sqrt((2 * li + 1) / (4.0 * np.pi) * _fact(li - mi) / _fact(li + mi))
    vals = norm * lpmv(mi, li, np.cos(theta)) * np.exp(1j * mi * phi)
    return vals
