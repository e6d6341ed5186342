"""Exhaustive small-range checks of the continued fraction identities the
classification rests on.

Each check walks every string in range and records counterexamples; the
suite is what ``lensfill verify lemmas`` runs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .budding import bud_left, bud_right, budding_closure, debud, is_budding_of
from .cfrac import cf_dual, cf_eval, cf_reverse, is_admissible
from .zerostrings import (
    BaseType,
    base_type,
    enumerate_zero_strings,
    is_blowup_of,
    is_zero_string,
    ones_count,
    plus_one_tail_value,
)

Seq = tuple[int, ...]


@dataclass
class LemmaResult:
    name: str
    checked: int = 0
    failures: list[Seq] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.failures

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        tail = f" first={self.failures[0]}" if self.failures else ""
        return f"{self.name}: {status} checked={self.checked} failures={len(self.failures)}{tail}"


def expansion_strings(max_len: int, max_entry: int) -> Iterator[Seq]:
    for n in range(1, max_len + 1):
        yield from itertools.product(range(2, max_entry + 1), repeat=n)


def _run(name: str, items: Iterable[Seq], pred: Callable[[Seq], bool]) -> LemmaResult:
    r = LemmaResult(name)
    for s in items:
        r.checked += 1
        if not pred(s):
            r.failures.append(s)
    return r


def _zero(s: Seq) -> bool:
    return is_admissible(s) and cf_eval(s) == 0


# -- expansion-string identities --------------------------------------------


def _reverse_dual(s):
    return cf_dual(cf_reverse(s)) == cf_reverse(cf_dual(s))


def _first_two(s):
    return (s[0] == 2) == (cf_dual(s)[0] != 2)


def _bump_first(s):
    return cf_dual((s[0] + 1,) + s[1:]) == (2,) + cf_dual(s)


def _leading_twos(s):
    m = cf_dual(s)
    if len(s) == 1:
        return m == (2,) * (s[0] - 1)
    k = s[0] - 2
    return m[:k] == (2,) * k and len(m) > k and m[k] != 2


def _drop_first(s):
    m = cf_dual(s)
    j = s[0] - 2
    return cf_dual(s[1:]) == (m[j] - 1,) + m[j + 1:]


def _prepend(max_entry):
    def check(s):
        m = cf_dual(s)
        return all(
            cf_dual((a0,) + s) == (2,) * (a0 - 2) + (m[0] + 1,) + m[1:]
            for a0 in range(2, max_entry + 1)
        )

    return check


def _splits(s):
    return [(s[:i], s[i:]) for i in range(1, len(s))]


def _concat(s):
    for left, right in _splits(s):
        a, b = cf_dual(left), cf_dual(right)
        if cf_dual(s) != a[:-1] + (a[-1] + b[0] - 1,) + b[1:]:
            return False
    return True


def _split(s):
    a = cf_dual(s)
    for left, right in _splits(s):
        x, y = cf_dual(left), cf_dual(right)
        i = len(x)
        if not (
            x[:-1] == a[: i - 1]
            and y[1:] == a[i:]
            and x[-1] + y[0] - 1 == a[i - 1]
        ):
            return False
    return True


def _bud_dual(s):
    return cf_dual(bud_left(s)) == bud_right(cf_dual(s))


def _sum_identity(s):
    m = cf_dual(s)
    return sum(s) + sum(m) == 3 * (len(s) + len(m)) - 2


# -- zero-string identities ---------------------------------------------------


def _one_one_212(s):
    return len(s) >= 3 and ones_count(s) == 1 and is_blowup_of(s, (2, 1, 2))


def _single_one_212(s):
    if not _one_one_212(s):
        return True
    d = debud(s)
    if len(s) > 3 and (len(d) != 1 or not all(_zero(x) for x in d)):
        return False
    return all(_zero(b) for b in (bud_left(s), bud_right(s)))


def _buddings_212(s):
    return is_budding_of(s, (2, 1, 2)) == _one_one_212(s)


def _end_one(s):
    if len(s) < 3 or 1 not in (s[0], s[-1]):
        return True
    return is_blowup_of(s, (1, 2, 1))


def _tail_half(s):
    if base_type(s) is not BaseType.BLOWUP_OF_212_ONLY:
        return True
    return (
        plus_one_tail_value(s) == Fraction(1, 2)
        and _zero(bud_left(s))
        and _zero(bud_right(s))
    )


def run_lemma_suite(
    max_len: int = 6, max_entry: int = 6, max_zero_len: int = 9
) -> list[LemmaResult]:
    exp = list(expansion_strings(max_len, max_entry))
    longer = [s for s in exp if len(s) >= 2]
    shorter = [s for s in exp if len(s) < max_len]
    zeros = [z for n in range(1, max_zero_len + 1) for z in enumerate_zero_strings(n)]
    out = [
        _run("reversal commutes with duality", exp, _reverse_dual),
        _run("leading 2 on exactly one side", longer, _first_two),
        _run("incrementing a1 prepends 2 to the dual", shorter, _bump_first),
        _run("dual opens with a1-2 twos", exp, _leading_twos),
        _run("dropping a1", longer, _drop_first),
        _run("prepending a0", shorter, _prepend(max_entry)),
        _run("concatenation splices the duals", longer, _concat),
        _run("duals of the two halves", longer, _split),
        _run("left budding dualizes to right budding", shorter, _bud_dual),
        _run("dual sum identity", exp, _sum_identity),
        _run("single-1 blowups of [2,1,2]", zeros, _single_one_212),
        _run("buddings of [2,1,2]", zeros, _buddings_212),
        _run("end entry 1 gives a blowup of [1,2,1]", zeros, _end_one),
        _run("tail value 1/2 and zero buddings", zeros, _tail_half),
    ]
    # every budding of [2,1,2] in range is itself a zero string
    zset = set(zeros)
    out.append(
        _run(
            "budding closure stays inside zero strings",
            budding_closure((2, 1, 2), max_zero_len),
            lambda s: s in zset and is_zero_string(s),
        )
    )
    return out
