"""Exact half-integer label arithmetic."""

import pytest

from poincare_cgc.halfint import (
    HalfInt,
    compatible,
    component_index,
    components,
    hrange,
    triangle_rule,
)


def test_twice_storage_and_of():
    assert HalfInt(3) == HalfInt.of(1.5)
    assert HalfInt(2) == HalfInt.of(1)
    assert HalfInt.of(HalfInt(5)) is HalfInt.of(HalfInt(5)) or HalfInt.of(
        HalfInt(5)
    ) == HalfInt(5)
    assert float(HalfInt(-1)) == -0.5
    assert int(HalfInt(4)) == 2


@pytest.mark.parametrize("bad", [0.3, 0.25, 1.01])
def test_of_rejects_non_half_integers(bad):
    with pytest.raises(ValueError):
        HalfInt.of(bad)


def test_twice_must_be_integral():
    with pytest.raises(TypeError):
        HalfInt(1.5)


def test_int_of_half_odd_raises():
    with pytest.raises(ValueError):
        int(HalfInt(1))


def test_arithmetic_and_comparison():
    assert HalfInt(1) + HalfInt(1) == HalfInt(2)
    assert HalfInt(3) - 1 == HalfInt(1)
    assert 2 - HalfInt(1) == HalfInt(3)
    assert -HalfInt(3) == HalfInt(-3)
    assert abs(HalfInt(-5)) == HalfInt(5)
    assert HalfInt(1) < HalfInt(2) <= HalfInt(2) < 1.5
    assert HalfInt(0) == 0 and not HalfInt(0)
    assert HalfInt(2) == 1.0


def test_hash_matches_numeric_value():
    assert hash(HalfInt(2)) == hash(1) == hash(1.0)
    assert {HalfInt(1): "a"}[0.5] == "a"


def test_str_forms():
    assert str(HalfInt(2)) == "1"
    assert str(HalfInt(-3)) == "-3/2"


def test_hrange_inclusive_unit_steps():
    assert hrange(0.5, 2.5) == [HalfInt(1), HalfInt(3), HalfInt(5)]
    assert hrange(1, 1) == [HalfInt(2)]
    assert hrange(1, 0) == []


def test_components_descending():
    assert components(1) == [HalfInt(2), HalfInt(0), HalfInt(-2)]
    assert components(0.5) == [HalfInt(1), HalfInt(-1)]
    assert len(components(HalfInt(7))) == 8


@pytest.mark.parametrize("j", [0, 0.5, 1, 1.5, 2])
def test_component_index_enumerates_rows(j):
    comps = components(j)
    for idx, m in enumerate(comps):
        assert component_index(j, m) == idx


def test_component_index_rejects_incompatible():
    with pytest.raises(ValueError):
        component_index(1, 0.5)
    with pytest.raises(ValueError):
        component_index(1, 2)
    assert compatible(1, 1) and not compatible(1, 1.5)


def test_triangle_rule():
    assert triangle_rule(0.5, 0.5, 1)
    assert triangle_rule(0.5, 0.5, 0)
    assert not triangle_rule(0.5, 0.5, 0.5)
    assert not triangle_rule(1, 1, 3)
    assert triangle_rule(2, 1, 1)
