import itertools
from collections import deque

import pytest
from hypothesis import given, strategies as st

from lensfill.budding import (
    bud_left,
    bud_right,
    budding_closure,
    budding_witness,
    buddings,
    debud,
    is_budding_of,
    is_one_replaceable,
)
from lensfill.cfrac import cf_dual, cf_eval, is_admissible
from lensfill.lisca import LensSpace, casson_harer_predicate, min_filling_euler
from lensfill.zerostrings import BaseType, base_type, iter_zero_strings, ones_count


def test_bud_examples():
    assert buddings((4,)) == {(2, 5), (5, 2)}
    assert bud_left((2, 1, 2)) == (2, 2, 1, 3)
    assert bud_right((2, 1, 2)) == (3, 1, 2, 2)
    assert bud_left((2, 4, 4, 2)) == (2, 2, 4, 4, 3)
    assert bud_right((2, 4, 4, 2)) == (3, 4, 4, 2, 2)
    with pytest.raises(ValueError):
        bud_left(())


def test_debud_examples():
    assert debud((2, 2, 1, 3)) == {(2, 1, 2)}
    assert debud((2, 4, 4, 2)) == {(4, 4, 1), (1, 4, 4)}
    assert debud((3, 3)) == set()
    assert debud((4,)) == set()


@given(st.lists(st.integers(1, 8), min_size=1, max_size=8))
def test_debud_undoes_bud(s):
    s = tuple(s)
    assert s in debud(bud_left(s))
    assert s in debud(bud_right(s))


def test_is_budding_of_examples():
    assert is_budding_of((2, 2, 1, 3), (2, 1, 2))
    assert is_budding_of((2, 2, 4, 4, 3), (2, 4, 4, 2))
    assert not is_budding_of((3, 1, 3, 1, 3), (2, 1, 2))
    assert is_budding_of((4,), (4,))
    path = budding_witness((2, 2, 6), (4,))
    assert path == ((4,), (2, 5), (2, 2, 6))


def _bfs_closure(base, max_len):
    seen = {base}
    todo = deque([base])
    while todo:
        t = todo.popleft()
        if len(t) < max_len:
            for u in (bud_left(t), bud_right(t)):
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
    return seen


def test_closure_examples():
    assert budding_closure((4,), 2) == [(4,), (2, 5), (5, 2)]
    three = set(budding_closure((4,), 3)) - set(budding_closure((4,), 2))
    assert three == {(2, 2, 6), (3, 5, 2), (2, 5, 3), (6, 2, 2)}
    assert all(len(t) <= 3 for t in budding_closure((4,), 3))


@pytest.mark.parametrize("L", range(1, 9))
def test_closure_matches_bfs(L):
    assert set(budding_closure((4,), L)) == _bfs_closure((4,), L)


def test_closure_max_entry_prunes_exactly():
    full = budding_closure((4,), 7)
    capped = budding_closure((4,), 7, max_entry=6)
    assert capped == [t for t in full if max(t) <= 6]


def test_closure_rejects_short_bound():
    with pytest.raises(ValueError):
        budding_closure((2, 1, 2), 2)


def test_dual_of_left_budding():
    for n in range(1, 6):
        for s in itertools.product(range(2, 7), repeat=n):
            assert cf_dual(bud_left(s)) == bud_right(cf_dual(s))


@given(st.lists(st.integers(1, 6), min_size=1, max_size=8))
def test_left_budding_preserves_admissible(s):
    # raising the last entry raises every suffix value, and the new first
    # denominator is the old value plus something positive
    s = tuple(s)
    if is_admissible(s) and cf_eval(s) >= 0:
        assert is_admissible(bud_left(s))


def test_budding_admissible_on_expansions_and_212_strings():
    for n in range(1, 6):
        for s in itertools.product(range(2, 7), repeat=n):
            assert is_admissible(bud_left(s)) and is_admissible(bud_right(s))
    for z in iter_zero_strings(9):
        if len(z) >= 3 and base_type(z) is BaseType.BLOWUP_OF_212_ONLY:
            assert all(is_admissible(b) for b in buddings(z))
            if ones_count(z) == 1:
                assert all(is_admissible(d) for d in debud(z))


def test_admissibility_not_preserved_in_general():
    # [1,2,1] = 0 buds to [2,2,1,2], whose suffix [2,1,2] is 0
    assert is_admissible((1, 2, 1))
    assert not is_admissible(bud_right((1, 2, 1)))
    # and [2,1,4,1,2] = 0 debuds to [1,4,1,1]
    assert (1, 4, 1, 1) in debud((2, 1, 4, 1, 2))
    assert not is_admissible((1, 4, 1, 1))


def test_buddings_of_212_characterized():
    for z in iter_zero_strings(9):
        single_one_212 = (
            len(z) >= 3 and ones_count(z) == 1 and base_type(z) is BaseType.BLOWUP_OF_212_ONLY
        )
        assert is_budding_of(z, (2, 1, 2)) == single_one_212


@pytest.mark.parametrize("f, ok", [((4,), True), ((2, 5), True), ((3, 3), False), ((2, 2), False)])
def test_one_replaceable_examples(f, ok):
    assert is_one_replaceable(f) is ok


def test_one_replaceable_rejects_non_minimal():
    with pytest.raises(ValueError):
        is_one_replaceable((1, 4))


def test_one_replaceable_agrees_with_fillings():
    for p in range(2, 121):
        for q in range(1, p):
            try:
                lens = LensSpace(p, q)
            except ValueError:
                continue
            a = is_one_replaceable(lens.plumbing_string)
            assert a == casson_harer_predicate(lens) == (min_filling_euler(lens) == 1)

