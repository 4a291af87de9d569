"""Fixed closed-form targets for the generated coefficient tables.

Every cell stores the closed form that the coupling code in cgc.py is
expected to reproduce, both as a printable expression string and as a
numeric evaluator. Regression tests sweep the generating functions against
these targets, and the command line's ``table --symbolic-check`` flag
prints each expression next to the measured residual.

Some cells additionally carry a *variant*: an alternative rendering of the
same entry that is inconsistent with the generating formula (a dropped
phase, a doubled magnitude, a misplaced radical, or a charge-parity sign
that no function of (l, s) can produce). The library never returns variant
values. The verify report prints one informational line per variant with
the residual between the two forms, so the deviation is documented rather
than silently absorbed.
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .cgc import HelicityChannel, SpinOrbitChannel
from .halfint import HalfInt

__all__ = [
    "TableCell",
    "ChannelRow",
    "CHANNEL_ROWS",
    "SPIN_ORBIT_CELLS",
    "HELICITY_CELLS",
    "reference_cells",
    "variant_cells",
]


@dataclass(frozen=True)
class TableCell:
    """One frozen table entry: labels, closed form, and optional variant."""

    scheme: str
    j: HalfInt
    channel: object
    component: HalfInt
    pair: tuple
    expression: str
    value: Callable[[float, float], complex]
    variant_expression: Optional[str] = None
    variant_value: Optional[Callable[[float, float], complex]] = None
    note: Optional[str] = None


@dataclass(frozen=True)
class ChannelRow:
    """One (j, s, l) channel with its parity and charge-parity signs.

    ``variant_charge_parity`` records a deviating sign that circulates for
    the row but contradicts xi_C = (-1)**(l+s); see the module docstring.
    """

    j: HalfInt
    s: HalfInt
    l: HalfInt
    parity: int
    charge_parity: int
    variant_charge_parity: Optional[int] = None


_H = HalfInt.of
_UP = _H(0.5)
_DN = _H(-0.5)
_PAIRS = ((_UP, _UP), (_UP, _DN), (_DN, _UP), (_DN, _DN))


def _so_cell(j, l, s, chi, pair_index, expression, value, **kw):
    return TableCell(
        scheme="spin-orbit",
        j=_H(j),
        channel=SpinOrbitChannel(l, s),
        component=_H(chi),
        pair=_PAIRS[pair_index],
        expression=expression,
        value=value,
        **kw,
    )


def _h_cell(j, lam1, lam2, lam, expression, value, **kw):
    channel = HelicityChannel(_H(lam1), _H(lam2))
    return TableCell(
        scheme="helicity",
        j=_H(j),
        channel=channel,
        component=_H(lam),
        pair=(channel.lam1, channel.lam2),
        expression=expression,
        value=value,
        **kw,
    )


def _zero(theta, phi):
    return 0j


def _p2(theta):
    c = np.cos(theta)
    return (3.0 * c * c - 1.0) / 2.0


# Channel table for a spin-1/2 fermion-antifermion pair, j <= 1, in channel
# enumeration order. parity = (-1)**(l+1), charge_parity = (-1)**(l+s). The
# two variant signs cannot come from any function of (l, s): the (s=1, l=1)
# channel appears under both j=0 and j=1, and the variant assigns those two
# rows opposite charge parity.
CHANNEL_ROWS = (
    ChannelRow(j=_H(0), s=_H(0), l=_H(0), parity=-1, charge_parity=+1),
    ChannelRow(j=_H(0), s=_H(1), l=_H(1), parity=+1, charge_parity=+1),
    ChannelRow(j=_H(1), s=_H(0), l=_H(1), parity=+1, charge_parity=-1),
    ChannelRow(j=_H(1), s=_H(1), l=_H(0), parity=-1, charge_parity=-1),
    ChannelRow(
        j=_H(1), s=_H(1), l=_H(1), parity=+1, charge_parity=+1,
        variant_charge_parity=-1,
    ),
    ChannelRow(
        j=_H(1), s=_H(1), l=_H(2), parity=-1, charge_parity=-1,
        variant_charge_parity=+1,
    ),
)


_SCALE_NOTE = (
    "variant scale sqrt(1/32pi) halves every entry of this channel and "
    "breaks the unit normalization shared by all other channels"
)

_SPIN_ORBIT_J0 = (
    # (l=0, s=0), chi=0: the spin-singlet column.
    _so_cell(0, 0, 0, 0, 0, "0", _zero),
    _so_cell(
        0, 0, 0, 0, 1, "sqrt(1/8pi)",
        lambda theta, phi: np.sqrt(1 / (8 * np.pi)) + 0j,
    ),
    _so_cell(
        0, 0, 0, 0, 2, "-sqrt(1/8pi)",
        lambda theta, phi: -np.sqrt(1 / (8 * np.pi)) + 0j,
    ),
    _so_cell(0, 0, 0, 0, 3, "0", _zero),
    # (l=1, s=1), chi=0.
    _so_cell(
        0, 1, 1, 0, 0, "sqrt(1/8pi)*sin(theta)*exp(-i*phi)",
        lambda theta, phi: np.sqrt(1 / (8 * np.pi)) * np.sin(theta) * np.exp(-1j * phi),
        variant_expression="sqrt(1/32pi)*sin(theta)*exp(-i*phi)",
        variant_value=lambda theta, phi: np.sqrt(1 / (32 * np.pi))
        * np.sin(theta) * np.exp(-1j * phi),
        note=_SCALE_NOTE,
    ),
    _so_cell(
        0, 1, 1, 0, 1, "-sqrt(1/8pi)*cos(theta)",
        lambda theta, phi: -np.sqrt(1 / (8 * np.pi)) * np.cos(theta) + 0j,
        variant_expression="-sqrt(1/32pi)*cos(theta)",
        variant_value=lambda theta, phi: -np.sqrt(1 / (32 * np.pi)) * np.cos(theta) + 0j,
        note=_SCALE_NOTE,
    ),
    _so_cell(
        0, 1, 1, 0, 2, "-sqrt(1/8pi)*cos(theta)",
        lambda theta, phi: -np.sqrt(1 / (8 * np.pi)) * np.cos(theta) + 0j,
        variant_expression="-sqrt(1/32pi)*cos(theta)",
        variant_value=lambda theta, phi: -np.sqrt(1 / (32 * np.pi)) * np.cos(theta) + 0j,
        note=_SCALE_NOTE,
    ),
    _so_cell(
        0, 1, 1, 0, 3, "-sqrt(1/8pi)*sin(theta)*exp(i*phi)",
        lambda theta, phi: -np.sqrt(1 / (8 * np.pi)) * np.sin(theta) * np.exp(1j * phi),
        variant_expression="-sqrt(1/32pi)*sin(theta)*exp(i*phi)",
        variant_value=lambda theta, phi: -np.sqrt(1 / (32 * np.pi))
        * np.sin(theta) * np.exp(1j * phi),
        note=_SCALE_NOTE,
    ),
)


_MAGNITUDE_NOTE = (
    "variant magnitude sqrt(3/16pi) gives this component row squared norm "
    "3/2; unit norm requires sqrt(3/32pi)"
)

_SPIN_ORBIT_J1 = (
    # Channel (l=1, s=0).
    _so_cell(1, 1, 0, 1, 0, "0", _zero),
    _so_cell(
        1, 1, 0, 1, 1, "sqrt(3/16pi)*sin(theta)*exp(i*phi)",
        lambda theta, phi: np.sqrt(3 / (16 * np.pi)) * np.sin(theta) * np.exp(1j * phi),
    ),
    _so_cell(
        1, 1, 0, 1, 2, "-sqrt(3/16pi)*sin(theta)*exp(i*phi)",
        lambda theta, phi: -np.sqrt(3 / (16 * np.pi)) * np.sin(theta) * np.exp(1j * phi),
    ),
    _so_cell(1, 1, 0, 1, 3, "0", _zero),
    _so_cell(1, 1, 0, 0, 0, "0", _zero),
    _so_cell(
        1, 1, 0, 0, 1, "sqrt(3/8pi)*cos(theta)",
        lambda theta, phi: np.sqrt(3 / (8 * np.pi)) * np.cos(theta) + 0j,
    ),
    _so_cell(
        1, 1, 0, 0, 2, "-sqrt(3/8pi)*cos(theta)",
        lambda theta, phi: -np.sqrt(3 / (8 * np.pi)) * np.cos(theta) + 0j,
    ),
    _so_cell(1, 1, 0, 0, 3, "0", _zero),
    _so_cell(1, 1, 0, -1, 0, "0", _zero),
    _so_cell(
        1, 1, 0, -1, 1, "-sqrt(3/16pi)*sin(theta)*exp(-i*phi)",
        lambda theta, phi: -np.sqrt(3 / (16 * np.pi)) * np.sin(theta) * np.exp(-1j * phi),
    ),
    _so_cell(
        1, 1, 0, -1, 2, "sqrt(3/16pi)*sin(theta)*exp(-i*phi)",
        lambda theta, phi: np.sqrt(3 / (16 * np.pi)) * np.sin(theta) * np.exp(-1j * phi),
    ),
    _so_cell(1, 1, 0, -1, 3, "0", _zero),
    # Channel (l=0, s=1).
    _so_cell(
        1, 0, 1, 1, 0, "-sqrt(1/4pi)",
        lambda theta, phi: -np.sqrt(1 / (4 * np.pi)) + 0j,
        variant_expression="sqrt(1/4pi)",
        variant_value=lambda theta, phi: np.sqrt(1 / (4 * np.pi)) + 0j,
        note=(
            "variant drops the (-1)**chi phase; the chi=-1 partner cell "
            "and rotation covariance fix this sign to -1"
        ),
    ),
    _so_cell(1, 0, 1, 1, 1, "0", _zero),
    _so_cell(1, 0, 1, 1, 2, "0", _zero),
    _so_cell(1, 0, 1, 1, 3, "0", _zero),
    _so_cell(1, 0, 1, 0, 0, "0", _zero),
    _so_cell(
        1, 0, 1, 0, 1, "sqrt(1/8pi)",
        lambda theta, phi: np.sqrt(1 / (8 * np.pi)) + 0j,
    ),
    _so_cell(
        1, 0, 1, 0, 2, "sqrt(1/8pi)",
        lambda theta, phi: np.sqrt(1 / (8 * np.pi)) + 0j,
    ),
    _so_cell(1, 0, 1, 0, 3, "0", _zero),
    _so_cell(1, 0, 1, -1, 0, "0", _zero),
    _so_cell(1, 0, 1, -1, 1, "0", _zero),
    _so_cell(1, 0, 1, -1, 2, "0", _zero),
    _so_cell(
        1, 0, 1, -1, 3, "-sqrt(1/4pi)",
        lambda theta, phi: -np.sqrt(1 / (4 * np.pi)) + 0j,
    ),
    # Channel (l=1, s=1).
    _so_cell(
        1, 1, 1, 1, 0, "sqrt(3/8pi)*cos(theta)",
        lambda theta, phi: np.sqrt(3 / (8 * np.pi)) * np.cos(theta) + 0j,
    ),
    _so_cell(
        1, 1, 1, 1, 1, "sqrt(3/32pi)*sin(theta)*exp(i*phi)",
        lambda theta, phi: np.sqrt(3 / (32 * np.pi)) * np.sin(theta) * np.exp(1j * phi),
        variant_expression="sqrt(3/16pi)*sin(theta)*exp(i*phi)",
        variant_value=lambda theta, phi: np.sqrt(3 / (16 * np.pi))
        * np.sin(theta) * np.exp(1j * phi),
        note=_MAGNITUDE_NOTE,
    ),
    _so_cell(
        1, 1, 1, 1, 2, "sqrt(3/32pi)*sin(theta)*exp(i*phi)",
        lambda theta, phi: np.sqrt(3 / (32 * np.pi)) * np.sin(theta) * np.exp(1j * phi),
        variant_expression="sqrt(3/16pi)*sin(theta)*exp(i*phi)",
        variant_value=lambda theta, phi: np.sqrt(3 / (16 * np.pi))
        * np.sin(theta) * np.exp(1j * phi),
        note=_MAGNITUDE_NOTE,
    ),
    _so_cell(1, 1, 1, 1, 3, "0", _zero),
    _so_cell(
        1, 1, 1, 0, 0, "-sqrt(3/16pi)*sin(theta)*exp(-i*phi)",
        lambda theta, phi: -np.sqrt(3 / (16 * np.pi)) * np.sin(theta) * np.exp(-1j * phi),
    ),
    _so_cell(1, 1, 1, 0, 1, "0", _zero),
    _so_cell(1, 1, 1, 0, 2, "0", _zero),
    _so_cell(
        1, 1, 1, 0, 3, "-sqrt(3/16pi)*sin(theta)*exp(i*phi)",
        lambda theta, phi: -np.sqrt(3 / (16 * np.pi)) * np.sin(theta) * np.exp(1j * phi),
    ),
    _so_cell(1, 1, 1, -1, 0, "0", _zero),
    _so_cell(
        1, 1, 1, -1, 1, "sqrt(3/32pi)*sin(theta)*exp(-i*phi)",
        lambda theta, phi: np.sqrt(3 / (32 * np.pi)) * np.sin(theta) * np.exp(-1j * phi),
        variant_expression="sqrt(3/16pi)*sin(theta)*exp(-i*phi)",
        variant_value=lambda theta, phi: np.sqrt(3 / (16 * np.pi))
        * np.sin(theta) * np.exp(-1j * phi),
        note=_MAGNITUDE_NOTE,
    ),
    _so_cell(
        1, 1, 1, -1, 2, "sqrt(3/32pi)*sin(theta)*exp(-i*phi)",
        lambda theta, phi: np.sqrt(3 / (32 * np.pi)) * np.sin(theta) * np.exp(-1j * phi),
        variant_expression="sqrt(3/16pi)*sin(theta)*exp(-i*phi)",
        variant_value=lambda theta, phi: np.sqrt(3 / (16 * np.pi))
        * np.sin(theta) * np.exp(-1j * phi),
        note=_MAGNITUDE_NOTE,
    ),
    _so_cell(
        1, 1, 1, -1, 3, "-sqrt(3/8pi)*cos(theta)",
        lambda theta, phi: -np.sqrt(3 / (8 * np.pi)) * np.cos(theta) + 0j,
    ),
    # Channel (l=2, s=1).
    _so_cell(
        1, 2, 1, 1, 0, "-sqrt(1/8pi)*(3*cos(theta)^2-1)/2",
        lambda theta, phi: -np.sqrt(1 / (8 * np.pi)) * _p2(theta) + 0j,
    ),
    _so_cell(
        1, 2, 1, 1, 1, "-sqrt(9/32pi)*sin(theta)*cos(theta)*exp(i*phi)",
        lambda theta, phi: -np.sqrt(9 / (32 * np.pi))
        * np.sin(theta) * np.cos(theta) * np.exp(1j * phi),
    ),
    _so_cell(
        1, 2, 1, 1, 2, "-sqrt(9/32pi)*sin(theta)*cos(theta)*exp(i*phi)",
        lambda theta, phi: -np.sqrt(9 / (32 * np.pi))
        * np.sin(theta) * np.cos(theta) * np.exp(1j * phi),
    ),
    _so_cell(
        1, 2, 1, 1, 3, "-sqrt(9/32pi)*sin(theta)^2*exp(2i*phi)",
        lambda theta, phi: -np.sqrt(9 / (32 * np.pi))
        * np.sin(theta) ** 2 * np.exp(2j * phi),
    ),
    _so_cell(
        1, 2, 1, 0, 0, "sqrt(9/16pi)*sin(theta)*cos(theta)*exp(-i*phi)",
        lambda theta, phi: np.sqrt(9 / (16 * np.pi))
        * np.sin(theta) * np.cos(theta) * np.exp(-1j * phi),
    ),
    _so_cell(
        1, 2, 1, 0, 1, "-sqrt(1/4pi)*(3*cos(theta)^2-1)/2",
        lambda theta, phi: -np.sqrt(1 / (4 * np.pi)) * _p2(theta) + 0j,
    ),
    _so_cell(
        1, 2, 1, 0, 2, "-sqrt(1/4pi)*(3*cos(theta)^2-1)/2",
        lambda theta, phi: -np.sqrt(1 / (4 * np.pi)) * _p2(theta) + 0j,
    ),
    _so_cell(
        1, 2, 1, 0, 3, "-sqrt(9/16pi)*sin(theta)*cos(theta)*exp(i*phi)",
        lambda theta, phi: -np.sqrt(9 / (16 * np.pi))
        * np.sin(theta) * np.cos(theta) * np.exp(1j * phi),
    ),
    _so_cell(
        1, 2, 1, -1, 0, "-sqrt(9/32pi)*sin(theta)^2*exp(-2i*phi)",
        lambda theta, phi: -np.sqrt(9 / (32 * np.pi))
        * np.sin(theta) ** 2 * np.exp(-2j * phi),
    ),
    _so_cell(
        1, 2, 1, -1, 1, "sqrt(9/32pi)*sin(theta)*cos(theta)*exp(-i*phi)",
        lambda theta, phi: np.sqrt(9 / (32 * np.pi))
        * np.sin(theta) * np.cos(theta) * np.exp(-1j * phi),
    ),
    _so_cell(
        1, 2, 1, -1, 2, "sqrt(9/32pi)*sin(theta)*cos(theta)*exp(-i*phi)",
        lambda theta, phi: np.sqrt(9 / (32 * np.pi))
        * np.sin(theta) * np.cos(theta) * np.exp(-1j * phi),
    ),
    _so_cell(
        1, 2, 1, -1, 3, "-sqrt(1/8pi)*(3*cos(theta)^2-1)/2",
        lambda theta, phi: -np.sqrt(1 / (8 * np.pi)) * _p2(theta) + 0j,
    ),
)


_RADICAL_NOTE = (
    "variant places cos(theta) under the radical; the d^1_{00} factor "
    "gives sqrt(3/4pi)*cos(theta), which is negative for theta > pi/2"
)

_HELICITY_J0 = (
    _h_cell(
        0, 0.5, 0.5, 0, "sqrt(1/4pi)",
        lambda theta, phi: np.sqrt(1 / (4 * np.pi)) + 0j,
    ),
    _h_cell(
        0, -0.5, -0.5, 0, "sqrt(1/4pi)",
        lambda theta, phi: np.sqrt(1 / (4 * np.pi)) + 0j,
    ),
)

_HELICITY_J1 = (
    # Channel (lam1, lam2) = (+1/2, +1/2).
    _h_cell(
        1, 0.5, 0.5, 1, "-sqrt(3/8pi)*exp(-i*phi)*sin(theta)",
        lambda theta, phi: -np.sqrt(3 / (8 * np.pi)) * np.exp(-1j * phi) * np.sin(theta),
    ),
    _h_cell(
        1, 0.5, 0.5, 0, "sqrt(3/4pi)*cos(theta)",
        lambda theta, phi: np.sqrt(3 / (4 * np.pi)) * np.cos(theta) + 0j,
        variant_expression="sqrt(3/4pi*cos(theta))",
        variant_value=lambda theta, phi: np.sqrt(
            3 / (4 * np.pi) * np.cos(theta) + 0j
        ),
        note=_RADICAL_NOTE,
    ),
    _h_cell(
        1, 0.5, 0.5, -1, "sqrt(3/8pi)*exp(i*phi)*sin(theta)",
        lambda theta, phi: np.sqrt(3 / (8 * np.pi)) * np.exp(1j * phi) * np.sin(theta),
    ),
    # Channel (+1/2, -1/2).
    _h_cell(
        1, 0.5, -0.5, 1, "sqrt(3/16pi)*(1+cos(theta))",
        lambda theta, phi: np.sqrt(3 / (16 * np.pi)) * (1 + np.cos(theta)) + 0j,
    ),
    _h_cell(
        1, 0.5, -0.5, 0, "sqrt(3/8pi)*exp(i*phi)*sin(theta)",
        lambda theta, phi: np.sqrt(3 / (8 * np.pi)) * np.exp(1j * phi) * np.sin(theta),
    ),
    _h_cell(
        1, 0.5, -0.5, -1, "sqrt(3/16pi)*exp(2i*phi)*(1-cos(theta))",
        lambda theta, phi: np.sqrt(3 / (16 * np.pi))
        * np.exp(2j * phi) * (1 - np.cos(theta)),
    ),
    # Channel (-1/2, +1/2).
    _h_cell(
        1, -0.5, 0.5, 1, "sqrt(3/16pi)*exp(-2i*phi)*(1-cos(theta))",
        lambda theta, phi: np.sqrt(3 / (16 * np.pi))
        * np.exp(-2j * phi) * (1 - np.cos(theta)),
    ),
    _h_cell(
        1, -0.5, 0.5, 0, "-sqrt(3/8pi)*exp(-i*phi)*sin(theta)",
        lambda theta, phi: -np.sqrt(3 / (8 * np.pi)) * np.exp(-1j * phi) * np.sin(theta),
    ),
    _h_cell(
        1, -0.5, 0.5, -1, "sqrt(3/16pi)*(1+cos(theta))",
        lambda theta, phi: np.sqrt(3 / (16 * np.pi)) * (1 + np.cos(theta)) + 0j,
    ),
    # Channel (-1/2, -1/2): the amplitude depends on lam1 - lam2 only, so
    # this block repeats the (+1/2, +1/2) one. That repetition is exact,
    # not a transcription slip.
    _h_cell(
        1, -0.5, -0.5, 1, "-sqrt(3/8pi)*exp(-i*phi)*sin(theta)",
        lambda theta, phi: -np.sqrt(3 / (8 * np.pi)) * np.exp(-1j * phi) * np.sin(theta),
    ),
    _h_cell(
        1, -0.5, -0.5, 0, "sqrt(3/4pi)*cos(theta)",
        lambda theta, phi: np.sqrt(3 / (4 * np.pi)) * np.cos(theta) + 0j,
        variant_expression="sqrt(3/4pi*cos(theta))",
        variant_value=lambda theta, phi: np.sqrt(
            3 / (4 * np.pi) * np.cos(theta) + 0j
        ),
        note=_RADICAL_NOTE,
    ),
    _h_cell(
        1, -0.5, -0.5, -1, "sqrt(3/8pi)*exp(i*phi)*sin(theta)",
        lambda theta, phi: np.sqrt(3 / (8 * np.pi)) * np.exp(1j * phi) * np.sin(theta),
    ),
)


SPIN_ORBIT_CELLS = {HalfInt(0): _SPIN_ORBIT_J0, HalfInt(2): _SPIN_ORBIT_J1}
HELICITY_CELLS = {HalfInt(0): _HELICITY_J0, HalfInt(2): _HELICITY_J1}


def reference_cells(scheme: str, j) -> tuple:
    """Frozen cells for one (scheme, j) table, in emission order.

    Emission order matches the command-line table output: channels in
    enumeration order, components descending, spin pairs row-major.
    Raises ValueError for a (scheme, j) with no stored closed forms.
    """
    j = HalfInt.of(j)
    tables = {"spin-orbit": SPIN_ORBIT_CELLS, "helicity": HELICITY_CELLS}
    if scheme not in tables:
        raise ValueError(f"unknown coupling scheme {scheme!r}")
    if j not in tables[scheme]:
        stored = ", ".join(str(k) for k in tables[scheme])
        raise ValueError(f"no stored closed forms for j={j}; available: {stored}")
    return tables[scheme][j]


def variant_cells() -> tuple:
    """Every stored cell that carries a deviating variant form."""
    out = []
    for table in (SPIN_ORBIT_CELLS, HELICITY_CELLS):
        for cells in table.values():
            out.extend(c for c in cells if c.variant_expression is not None)
    return tuple(out)
