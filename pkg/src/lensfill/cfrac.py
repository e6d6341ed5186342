"""Hirzebruch-Jung continued fractions.

A string ``[a1, ..., an]`` denotes ``a1 - 1/(a2 - 1/(... - 1/an))``.
Values are exact :class:`fractions.Fraction` objects; nothing here
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

__all__ = [
    "NotAdmissible",
    "cf_eval",
    "cf_expand",
    "cf_dual",
    "cf_reverse",
    "mod_inverse",
    "is_expansion",
    "is_admissible",
    "dual_pair",
]


class NotAdmissible(ArithmeticError):
    """A partial value that must be divided into vanished.

    ``index`` is the 1-based position ``i`` whose suffix value
    ``[a_i, ..., a_n]`` is zero.
    """

    def __init__(self, entries: Sequence[int], index: int):
        self.entries = tuple(entries)
        self.index = index
        super().__init__(
            f"{list(self.entries)} is not admissible: suffix starting at "
            f"position {index} evaluates to 0"
        )


def _check_ints(s: Sequence[int]) -> tuple[int, ...]:
    t = tuple(s)
    for a in t:
        if isinstance(a, bool) or not isinstance(a, int):
            raise TypeError(f"entries must be integers, got {a!r}")
    return t


def cf_eval(s: Sequence[int]) -> Fraction:
    """Evaluate ``[a1, ..., an]`` exactly, right to left.

    Raises :class:`NotAdmissible` when some suffix value ``r_{i+1}`` is
    zero, and :class:`ValueError` on the empty string.

    >>> cf_eval([2, 4, 4, 2])
    Fraction(45, 26)
    >>> cf_eval([2, 1, 3])
    Fraction(1, 2)
    """
    t = _check_ints(s)
    if not t:
        raise ValueError("the empty string has no value")
    # r = num/den, kept as a coprime integer pair
    num, den = t[-1], 1
    for i in range(len(t) - 2, -1, -1):
        if num == 0:
            raise NotAdmissible(t, i + 2)
        num, den = t[i] * num - den, num
    return Fraction(num, den)


def is_admissible(s: Sequence[int]) -> bool:
    """True for ``[0]`` and for strings with entries >= 1 whose every
    denominator is positive: each suffix value that gets divided into is
    > 0.  Nonzero alone is not enough; ``[2,1,1,1,1,2]`` evaluates to 0 with
    a negative denominator and is not a blowup of ``[0]``."""
    t = tuple(s)
    if t == (0,):
        return True
    if not t or min(t) < 1:
        return False
    num, den = t[-1], 1
    for a in reversed(t[:-1]):
        if num <= 0:
            return False
        num, den = a * num - den, num
    return True


def is_expansion(s: Sequence[int]) -> bool:
    return len(s) > 0 and all(a >= 2 for a in s)


def cf_expand(r: Fraction | int | tuple[int, int]) -> tuple[int, ...]:
    """The unique expansion with every entry >= 2 of a rational ``r > 1``.

    Uses ``a1 = ceil(p/q)`` and recurses on ``q / (a1*q - p)``.

    >>> cf_expand(Fraction(297, 122))
    (3, 2, 5, 2, 2, 6)
    """
    if isinstance(r, tuple):
        r = Fraction(*r)
    r = Fraction(r)
    if r <= 1:
        raise ValueError(f"{r} has no expansion with entries >= 2 (need r > 1)")
    p, q = r.numerator, r.denominator
    out = []
    while q != 0:
        a = -(-p // q)
        out.append(a)
        p, q = q, a * q - p
    return tuple(out)


def cf_dual(s: Sequence[int]) -> tuple[int, ...]:
    """Dual expansion: maps the expansion of ``p/q`` to that of ``p/(p-q)``.

    Works directly on the entries, without evaluating:

    1. a leading entry ``a > 2`` emits ``a - 2`` twos and becomes 2;
    2. a run of ``k`` leading twos followed by ``b`` emits ``k + 2``, the
       run is dropped and ``b`` becomes ``b - 1``; if the whole string is
       ``k`` twos, emit ``k + 1`` and stop;
    3. repeat on what is left.

    >>> cf_dual([3, 2, 5, 2, 2, 6])
    (2, 4, 2, 2, 5, 2, 2, 2, 2)
    """
    seq = list(_check_ints(s))
    if not is_expansion(seq):
        raise ValueError(f"{seq} is not an expansion string (entries >= 2)")
    out: list[int] = []
    start = 0
    while True:
        if seq[start] != 2:
            out.extend([2] * (seq[start] - 2))
            seq[start] = 2
        k = 0
        while start + k < len(seq) and seq[start + k] == 2:
            k += 1
        if start + k == len(seq):
            out.append(k + 1)
            return tuple(out)
        out.append(k + 2)
        start += k
        seq[start] -= 1


def cf_reverse(s: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(_check_ints(s)))


def mod_inverse(q: int, p: int) -> int:
    """The inverse ``qbar`` of ``q`` modulo ``p`` with ``1 <= qbar < p``."""
    if p < 2 or not 0 < q < p:
        raise ValueError(f"need 0 < q < p, got q={q}, p={p}")
    if gcd(p, q) != 1:
        raise ValueError(f"{q} is not invertible modulo {p}")
    return pow(q, -1, p)


def dual_pair(s: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...], int, int]:
    """Return ``(left, right, p, q)`` with ``left = s = p/q`` and ``right = p/(p-q)``."""
    left = tuple(s)
    right = cf_dual(left)
    v = cf_eval(left)
    return left, right, v.numerator, v.denominator
