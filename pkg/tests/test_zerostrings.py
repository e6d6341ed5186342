from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lensfill.cfrac import cf_eval, cf_reverse
from lensfill.zerostrings import (
    BaseType,
    base_type,
    blowdown_at,
    blowdowns,
    blowup_after,
    blowup_before,
    blowups,
    enumerate_zero_strings,
    is_blowup_of,
    is_zero_string,
    iter_zero_strings,
    ones_count,
    ones_positions,
    plus_one_tail_value,
)
from oracles import brute_zero_strings, catalan, closure_zero_strings

ALL9 = list(iter_zero_strings(9))


def test_blowup_examples():
    assert blowup_before([0], 1) == (1, 1)
    assert blowup_before([1, 1], 2) == (2, 1, 2)
    assert blowup_before([1, 1], 1) == (1, 2, 1)
    assert blowup_after([1, 1], 2) == (1, 2, 1)
    assert blowup_before([2, 1, 2], 2) == (3, 1, 2, 2)
    assert blowup_after([2, 1, 2], 2) == (2, 2, 1, 3)
    assert blowups([0]) == {(1, 1)}
    assert blowups([1, 1]) == {(1, 2, 1), (2, 1, 2)}


def test_blowdown_examples():
    assert blowdown_at([1, 3, 1, 2], 3) == (1, 2, 1)
    assert blowdown_at([1, 1], 1) == (0,)
    assert blowdowns([2, 1, 2]) == {(1, 1)}


def test_bad_positions():
    with pytest.raises(IndexError):
        blowup_before([1, 1], 3)
    with pytest.raises(IndexError):
        blowdown_at([2, 1, 2], 0)
    with pytest.raises(ValueError):
        blowdown_at([2, 1, 2], 1)
    with pytest.raises(ValueError):
        blowups([2, 2])


@pytest.mark.parametrize("n", range(1, 11))
def test_counts_are_catalan(n):
    assert len(enumerate_zero_strings(n)) == catalan(n - 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_matches_brute_scan(n):
    assert set(enumerate_zero_strings(n)) == brute_zero_strings(n)
    assert set(enumerate_zero_strings(n)) == closure_zero_strings(n)


def test_enumeration_sorted_and_valid():
    for n in range(1, 9):
        zs = enumerate_zero_strings(n)
        assert zs == sorted(zs)
        assert all(is_zero_string(z) for z in zs)


def test_every_long_zero_string_has_a_one():
    for z in ALL9:
        if len(z) >= 2:
            assert 1 in z


def test_reversal_closure():
    zset = set(ALL9)
    for z in ALL9:
        assert cf_reverse(z) in zset


def test_blowup_blowdown_inverse():
    for z in ALL9:
        if len(z) == 9:
            continue
        for i in range(1, len(z) + 1):
            for up in (blowup_before(z, i), blowup_after(z, i)):
                assert z in blowdowns(up)
        for d in blowdowns(z):
            assert z in blowups(d)


@given(st.data())
def test_random_round_trip(data):
    z = (0,)
    for _ in range(data.draw(st.integers(0, 9))):
        z = data.draw(st.sampled_from(sorted(blowups(z))))
    assert cf_eval(z) == 0
    if len(z) > 1:
        i = data.draw(st.sampled_from(ones_positions(z)))
        down = blowdown_at(z, i)
        assert z in blowups(down)


def test_ones():
    assert ones_positions([3, 1, 3, 1, 3]) == [2, 4]
    assert ones_count([2, 2, 1, 3]) == 1


@pytest.mark.parametrize(
    "s, tag",
    [
        ((0,), BaseType.SINGLE_ZERO),
        ((1, 1), BaseType.ONE_ONE),
        ((1, 2, 1), BaseType.BLOWUP_OF_121),
        ((2, 1, 2), BaseType.BLOWUP_OF_212_ONLY),
        ((1, 3, 1, 2), BaseType.BLOWUP_OF_121),
        ((2, 2, 1, 3), BaseType.BLOWUP_OF_212_ONLY),
        ((3, 1, 3, 1, 3), BaseType.BLOWUP_OF_212_ONLY),
    ],
)
def test_base_type_examples(s, tag):
    assert base_type(s) is tag


def test_base_type_consistent_with_reachability():
    for z in ALL9:
        if len(z) < 3:
            continue
        tag = base_type(z)
        r121 = is_blowup_of(z, (1, 2, 1))
        r212 = is_blowup_of(z, (2, 1, 2))
        assert r121 or r212
        assert (tag is BaseType.BLOWUP_OF_121) == r121
        if ones_count(z) == 1:
            assert tag is BaseType.BLOWUP_OF_212_ONLY


def test_end_one_means_121():
    for z in ALL9:
        if len(z) >= 3 and 1 in (z[0], z[-1]):
            assert base_type(z) is BaseType.BLOWUP_OF_121


@pytest.mark.parametrize("s", [(2, 1, 2), (3, 1, 3, 1, 3), (2, 2, 1, 3)])
def test_plus_one_tail(s):
    assert plus_one_tail_value(s) == Fraction(1, 2)


def test_plus_one_tail_rejects_121():
    with pytest.raises(ValueError):
        plus_one_tail_value((1, 2, 1))
