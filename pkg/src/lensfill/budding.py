"""Buddings of framing sequences and continued-fraction strings.

The same two moves act on both: ``bud_left`` prepends a 2 and raises the
last entry, ``bud_right`` raises the first entry and appends a 2.  Framing
sequences are stored by their absolute values, so ``(4)`` is the -4 disk
bundle.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Sequence

__all__ = [
    "bud_left",
    "bud_right",
    "buddings",
    "debud",
    "is_budding_of",
    "budding_witness",
    "budding_closure",
    "is_one_replaceable",
]

Seq = tuple[int, ...]


def bud_left(s: Sequence[int]) -> Seq:
    """``(m1, ..., mk) -> (2, m1, ..., mk + 1)``."""
    t = tuple(s)
    if not t:
        raise ValueError("cannot bud an empty sequence")
    return (2,) + t[:-1] + (t[-1] + 1,)


def bud_right(s: Sequence[int]) -> Seq:
    """``(m1, ..., mk) -> (m1 + 1, ..., mk, 2)``."""
    t = tuple(s)
    if not t:
        raise ValueError("cannot bud an empty sequence")
    return (t[0] + 1,) + t[1:] + (2,)


def buddings(s: Sequence[int]) -> set[Seq]:
    return {bud_left(s), bud_right(s)}


def debud(s: Sequence[int]) -> set[Seq]:
    """Every legal single debudding of ``s`` (zero, one or two of them).

    Undoing ``bud_left`` needs ``a1 = 2`` and ``an > 1``; undoing
    ``bud_right`` needs ``a1 > 1`` and ``an = 2``.  Entries may drop to 1.
    """
    t = tuple(s)
    out: set[Seq] = set()
    if len(t) < 2:
        return out
    if t[0] == 2 and t[-1] > 1:
        out.add(t[1:-1] + (t[-1] - 1,))
    if t[0] > 1 and t[-1] == 2:
        out.add((t[0] - 1,) + t[1:-1])
    return out


@lru_cache(maxsize=None)
def _budding_path(t: Seq, base: Seq) -> tuple[Seq, ...] | None:
    if t == base:
        return (t,)
    if len(t) <= len(base):
        return None
    for d in sorted(debud(t)):
        rest = _budding_path(d, base)
        if rest is not None:
            return rest + (t,)
    return None


def budding_witness(s: Sequence[int], base: Sequence[int]) -> tuple[Seq, ...] | None:
    """A chain ``base -> ... -> s`` of single buddings, or None."""
    return _budding_path(tuple(s), tuple(base))


def is_budding_of(s: Sequence[int], base: Sequence[int]) -> bool:
    """True when ``s`` is obtained from ``base`` by zero or more buddings."""
    return _budding_path(tuple(s), tuple(base)) is not None


def budding_closure(
    base: Sequence[int], max_len: int, max_entry: int | None = None
) -> list[Seq]:
    """Everything reachable from ``base`` by buddings, up to ``max_len``.

    ``base`` itself is included.  Budding never lowers an entry, so pruning
    on ``max_entry`` during the search loses nothing.
    """
    b = tuple(base)
    if max_len < len(b):
        raise ValueError("max_len is shorter than the base")

    def fits(t: Seq) -> bool:
        return max_entry is None or max(t) <= max_entry

    seen: set[Seq] = set()
    if fits(b):
        seen.add(b)
    queue = deque(seen)
    while queue:
        t = queue.popleft()
        if len(t) == max_len:
            continue
        for u in buddings(t):
            if u not in seen and fits(u):
                seen.add(u)
                queue.append(u)
    return sorted(seen, key=lambda t: (len(t), t))


def is_one_replaceable(f: Sequence[int]) -> bool:
    """True when the plumbing ``(-m1, ..., -mk)`` is a budding of ``(-4)``.

    These are exactly the linear plumbings that rationally blow down.
    """
    t = tuple(f)
    if not t or min(t) < 2:
        raise ValueError(f"{list(t)} is not a minimal framing sequence")
    # a budding of (4) has sum 3*len + 1; cheap early exit
    if sum(t) != 3 * len(t) + 1:
        return False
    return is_budding_of(t, (4,))

