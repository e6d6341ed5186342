"""Admissible continued fractions equal to zero.

Every such string of length ``n >= 2`` comes from ``[0]`` by ``n - 1``
blowups; they are counted by the Catalan numbers.  Positions are 1-based
throughout, matching how the strings are usually written down.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .cfrac import cf_eval, is_admissible

__all__ = [
    "BaseType",
    "blowup_before",
    "blowup_after",
    "blowdown_at",
    "blowups",
    "blowdowns",
    "enumerate_zero_strings",
    "is_zero_string",
    "ones_count",
    "ones_positions",
    "base_type",
    "is_blowup_of",
    "plus_one_tail_value",
]


class BaseType(enum.Enum):
    SINGLE_ZERO = "[0]"
    ONE_ONE = "[1,1]"
    BLOWUP_OF_121 = "blowup of [1,2,1]"
    BLOWUP_OF_212_ONLY = "blowup of [2,1,2] only"


def is_zero_string(s: Sequence[int]) -> bool:
    t = tuple(s)
    if t == (0,):
        return True
    return is_admissible(t) and cf_eval(t) == 0


def _require_zero(s: Sequence[int]) -> tuple[int, ...]:
    t = tuple(s)
    if not is_zero_string(t):
        raise ValueError(f"{list(t)} is not an admissible zero string")
    return t


def _insert_one(t: tuple[int, ...], gap: int) -> tuple[int, ...]:
    # gap g (0..n) sits between t[g-1] and t[g]; neighbours that exist get +1
    out = list(t[:gap]) + [1] + list(t[gap:])
    if gap > 0:
        out[gap - 1] += 1
    if gap < len(t):
        out[gap + 1] += 1
    return tuple(out)


def blowup_before(s: Sequence[int], i: int) -> tuple[int, ...]:
    """Insert a 1 just before ``a_i``, bumping both neighbours.

    >>> blowup_before([1, 1], 2)
    (2, 1, 2)
    """
    t = _require_zero(s)
    if not 1 <= i <= len(t):
        raise IndexError(f"position {i} out of range for length {len(t)}")
    return _insert_one(t, i - 1)


def blowup_after(s: Sequence[int], i: int) -> tuple[int, ...]:
    t = _require_zero(s)
    if not 1 <= i <= len(t):
        raise IndexError(f"position {i} out of range for length {len(t)}")
    return _insert_one(t, i)


def blowdown_at(s: Sequence[int], i: int) -> tuple[int, ...]:
    """Remove the entry ``a_i = 1`` and decrement its neighbours."""
    t = _require_zero(s)
    if not 1 <= i <= len(t):
        raise IndexError(f"position {i} out of range for length {len(t)}")
    if t[i - 1] != 1:
        raise ValueError(f"entry {i} of {list(t)} is {t[i - 1]}, not 1")
    if t == (1, 1):
        return (0,)
    out = list(t)
    if i >= 2:
        out[i - 2] -= 1
    if i < len(t):
        out[i] -= 1
    del out[i - 1]
    return tuple(out)


def blowups(s: Sequence[int]) -> set[tuple[int, ...]]:
    """All single blowups of a zero string."""
    t = _require_zero(s)
    if t == (0,):
        return {(1, 1)}
    return {_insert_one(t, g) for g in range(len(t) + 1)}


def blowdowns(s: Sequence[int]) -> set[tuple[int, ...]]:
    t = _require_zero(s)
    return {blowdown_at(t, i + 1) for i, a in enumerate(t) if a == 1}


@lru_cache(maxsize=None)
def _zero_strings(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((0,),)
    prev = _zero_strings(n - 1)
    level: set[tuple[int, ...]] = set()
    for t in prev:
        level |= blowups(t)
    return tuple(sorted(level))


def enumerate_zero_strings(n: int) -> list[tuple[int, ...]]:
    """All admissible zero strings of length ``n``, in lexicographic order.

    Built as the blowup closure of ``[0]``; the count is ``Catalan(n - 1)``.
    """
    if n < 1:
        raise ValueError("length must be at least 1")
    return list(_zero_strings(n))


def ones_positions(s: Sequence[int]) -> list[int]:
    return [i + 1 for i, a in enumerate(s) if a == 1]


def ones_count(s: Sequence[int]) -> int:
    return sum(1 for a in s if a == 1)


@lru_cache(maxsize=None)
def _reaches(t: tuple[int, ...], base: tuple[int, ...]) -> bool:
    if len(t) == len(base):
        return t == base
    if len(t) < len(base):
        return False
    return any(_reaches(d, base) for d in blowdowns(t))


def is_blowup_of(s: Sequence[int], base: Sequence[int]) -> bool:
    """True when ``s`` arises from ``base`` by zero or more blowups.

    Decided by backtracking over every blowdown of ``s``.
    """
    return _reaches(_require_zero(s), _require_zero(base))


def base_type(s: Sequence[int]) -> BaseType:
    """Which length-<=3 zero string ``s`` descends from.

    Strings of length 3 or more come from ``[1,2,1]`` or ``[2,1,2]`` (or
    both); a string that blows down to ``[1,2,1]`` is tagged as such even
    if it also blows down to ``[2,1,2]``.
    """
    t = _require_zero(s)
    if t == (0,):
        return BaseType.SINGLE_ZERO
    if t == (1, 1):
        return BaseType.ONE_ONE
    if _reaches(t, (1, 2, 1)):
        return BaseType.BLOWUP_OF_121
    return BaseType.BLOWUP_OF_212_ONLY


def plus_one_tail_value(s: Sequence[int]) -> Fraction:
    """Value of ``s`` with its last entry raised by one; always 1/2 here."""
    t = _require_zero(s)
    if base_type(t) is not BaseType.BLOWUP_OF_212_ONLY:
        raise ValueError(f"{list(t)} is a blowup of [1,2,1] (or too short)")
    return cf_eval(t[:-1] + (t[-1] + 1,))


def iter_zero_strings(max_len: int) -> Iterable[tuple[int, ...]]:
    for n in range(1, max_len + 1):
        yield from _zero_strings(n)
