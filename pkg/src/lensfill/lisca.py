"""Lisca's fillings of lens spaces and k-replaceable linear plumbings.

For ``L(p, q)`` write ``p/(p-q) = [b1, ..., bn]`` (entries >= 2).  Minimal
symplectic fillings of the standard contact structure correspond to
admissible zero strings ``[a1, ..., an]`` with ``ai <= bi``; the filling has
Euler characteristic ``sum(bi - ai)``.

The linear plumbing ``(-m1, ..., -mr)`` bounds ``L(p, q)`` with
``p/q = [m1, ..., mr]``, so its dual string is ``cf_dual(m)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterator, Sequence

from .budding import budding_closure
from .cfrac import cf_dual, cf_eval, cf_expand
from .zerostrings import ones_positions

__all__ = [
    "LensSpace",
    "Filling",
    "Witness",
    "dominated_zero_strings",
    "fillings",
    "min_filling_euler",
    "has_filling_with_euler",
    "is_k_replaceable",
    "two_replaceable_witnesses",
    "casson_harer_predicate",
    "theorem1_families",
    "Theorem1Report",
    "verify_theorem1",
    "ResourceCapExceeded",
]

Seq = tuple[int, ...]


@dataclass(frozen=True, order=True)
class LensSpace:
    p: int
    q: int

    def __post_init__(self):
        if not 0 < self.q < self.p or gcd(self.p, self.q) != 1:
            raise ValueError(f"L({self.p},{self.q}) needs coprime 0 < q < p")

    @classmethod
    def bounded_by(cls, framings: Sequence[int]) -> "LensSpace":
        """Boundary of the linear plumbing with framings ``-m1, ..., -mr``."""
        _check_minimal(framings)
        v = cf_eval(framings)
        return cls(v.numerator, v.denominator)

    @property
    def plumbing_string(self) -> Seq:
        return cf_expand(Fraction(self.p, self.q))

    @property
    def dual_string(self) -> Seq:
        return cf_expand(Fraction(self.p, self.p - self.q))

    def __str__(self):
        return f"L({self.p},{self.q})"


@dataclass(frozen=True)
class Filling:
    lens: LensSpace
    dual_string: Seq
    zero_string: Seq
    euler: int

    @property
    def deficit(self) -> Seq:
        return tuple(b - a for a, b in zip(self.zero_string, self.dual_string))


@dataclass(frozen=True)
class Witness:
    """An Euler characteristic 2 filling, described by where the dual string
    exceeds its zero string.

    ``form`` is 1 (one bump on a 1-entry, one elsewhere), 2 (a double bump
    on the only 1-entry; also used for the length-one string ``[0]``) or 3
    (single bumps on two distinct 1-entries).
    """

    zero_string: Seq
    bumps: tuple[int, ...]
    form: int


def _check_minimal(framings: Sequence[int]) -> Seq:
    t = tuple(framings)
    if not t or min(t) < 2:
        raise ValueError(f"{list(t)} is not a minimal framing sequence (entries >= 2)")
    return t


def dominated_zero_strings(
    dual: Sequence[int], max_deficit: int | None = None, min_deficit: int = 0
) -> Iterator[tuple[Seq, int]]:
    """Yield ``(zero_string, deficit)`` for zero strings dominated by ``dual``.

    Depth-first from the right end.  Suffix values of a zero string are
    positive away from the first entry, which bounds each entry from below;
    the first entry is then forced.  Only strings whose total deficit lies in
    ``[min_deficit, max_deficit]`` are produced.
    """
    b = tuple(dual)
    n = len(b)
    if n == 0:
        return
    cap = sum(b) if max_deficit is None else max_deficit
    if n == 1:
        if min_deficit <= b[0] <= cap:
            yield (0,), b[0]
        return

    a = [0] * n

    def rec(i: int, num: int, den: int, used: int) -> Iterator[tuple[Seq, int]]:
        # (num, den), den > 0, is the value of [a_{i+1}, ..., a_n] (0-based i+1)
        if i == 0:
            if den % num:
                return
            a0 = den // num
            d = used + b[0] - a0
            if 1 <= a0 <= b[0] and min_deficit <= d <= cap:
                a[0] = a0
                yield tuple(a), d
            return
        lo = max(1, b[i] - (cap - used), den // num + 1)
        for ai in range(b[i], lo - 1, -1):
            a[i] = ai
            yield from rec(i - 1, ai * num - den, num, used + b[i] - ai)

    last = b[-1]
    for an in range(last, max(1, last - cap) - 1, -1):
        a[-1] = an
        yield from rec(n - 2, an, 1, last - an)


def fillings(lens: LensSpace, k: int | None = None) -> list[Filling]:
    """All minimal fillings of ``lens`` (or only those with Euler
    characteristic ``k``), sorted by Euler characteristic then zero string."""
    dual = lens.dual_string
    found = dominated_zero_strings(
        dual, max_deficit=k, min_deficit=0 if k is None else k
    )
    out = [Filling(lens, dual, z, d) for z, d in found]
    out.sort(key=lambda f: (f.euler, f.zero_string))
    return out


def has_filling_with_euler(dual: Sequence[int], k: int) -> bool:
    return next(dominated_zero_strings(dual, k, k), None) is not None


def min_filling_euler(lens: LensSpace) -> int:
    """Smallest Euler characteristic among the minimal fillings.

    Searched by increasing deficit budget; the plumbing itself is always a
    filling, so this terminates.
    """
    dual = lens.dual_string
    if len(dual) == 1:
        return dual[0]
    k = 1
    while True:
        hit = next(dominated_zero_strings(dual, k), None)
        if hit is not None:
            return hit[1]
        k += 1


def is_k_replaceable(framings: Sequence[int], k: int) -> bool:
    """Whether the boundary of the plumbing has a minimal filling with
    Euler characteristic ``k``."""
    f = _check_minimal(framings)
    return has_filling_with_euler(cf_dual(f), k)


def _form(z: Seq, bumps: Seq) -> int:
    ones = set(ones_positions(z))
    if len(z) == 1:
        return 2
    if len(bumps) == 1:
        return 2
    hit = sum(1 for i in bumps if i in ones)
    return 3 if hit == 2 else 1


def two_replaceable_witnesses(lens: LensSpace) -> list[Witness]:
    """Every Euler characteristic 2 filling, tagged with its form."""
    out = []
    for f in fillings(lens, k=2):
        bumps = tuple(i + 1 for i, d in enumerate(f.deficit) if d > 0)
        out.append(Witness(f.zero_string, bumps, _form(f.zero_string, bumps)))
    return out


def casson_harer_predicate(lens: LensSpace) -> bool:
    """``p = n^2`` and ``q = n*m - 1`` for some coprime ``n, m``."""
    p, q = lens.p, lens.q
    n = isqrt(p)
    if n * n != p:
        return False
    # q + 1 = n*m with 0 < q < p forces 1 <= m <= n
    return (q + 1) % n == 0 and gcd(n, (q + 1) // n) == 1


# -- Classification of 2-replaceable linear plumbings -------------------------

FAMILY_TAGS = ("trivial", "a", "b", "c", "d")


def theorem1_families(
    max_len: int, max_entry: int, by_tag: bool = False
) -> set[Seq] | dict[str, set[Seq]]:
    """The classified 2-replaceable minimal linear plumbings, truncated.

    trivial: ``(z)``.
    (a): ``(B, z, C)`` with ``B``, ``C`` buddings of ``(4)`` or empty.
    (b): buddings of ``(B, 2)`` and ``(2, B)``.
    (c): buddings of ``(3, 3)``.
    (d): buddings of ``(2, B, C, 2)``.

    ``B`` and ``C`` range over nonempty buddings of ``(4)``.  Entries only
    grow under budding and concatenation, so generating arms inside the
    same bounds loses nothing.
    """
    if max_len < 1 or max_entry < 2:
        raise ValueError("need max_len >= 1 and max_entry >= 2")
    arms = budding_closure((4,), max(max_len, 1), max_entry) if max_entry >= 4 else []
    fam: dict[str, set[Seq]] = {t: set() for t in FAMILY_TAGS}

    fam["trivial"] = {(z,) for z in range(2, max_entry + 1)}

    sides = [()] + arms
    for left in sides:
        for right in sides:
            if len(left) + len(right) + 1 > max_len:
                continue
            for z in range(2, max_entry + 1):
                fam["a"].add(left + (z,) + right)

    def close(base: Seq) -> set[Seq]:
        if len(base) > max_len or max(base) > max_entry:
            return set()
        return set(budding_closure(base, max_len, max_entry))

    for arm in arms:
        fam["b"] |= close(arm + (2,))
        fam["b"] |= close((2,) + arm)
    fam["c"] = close((3, 3))
    for left in arms:
        for right in arms:
            fam["d"] |= close((2,) + left + right + (2,))

    if by_tag:
        return fam
    return set().union(*fam.values())


class ResourceCapExceeded(RuntimeError):
    pass


@dataclass
class Theorem1Report:
    max_len: int
    max_entry: int
    checked: int
    replaceable: set[Seq] = field(default_factory=set)
    generated: set[Seq] = field(default_factory=set)
    complete: bool = True

    @property
    def missing_from_families(self) -> list[Seq]:
        """2-replaceable sequences that no family produces."""
        return sorted(self.replaceable - self.generated)

    @property
    def spurious_in_families(self) -> list[Seq]:
        """Family members that fail the filling check."""
        return sorted(self.generated - self.replaceable)

    @property
    def ok(self) -> bool:
        return (
            self.complete
            and not self.missing_from_families
            and not self.spurious_in_families
        )

    def summary(self) -> str:
        lines = [
            f"theorem1 max_len={self.max_len} max_entry={self.max_entry}: "
            f"checked={self.checked} replaceable={len(self.replaceable)} "
            f"generated={len(self.generated)} complete={self.complete}",
            f"  missing from families: {len(self.missing_from_families)}",
            f"  spurious in families:  {len(self.spurious_in_families)}",
        ]
        for s in self.missing_from_families[:20]:
            lines.append(f"    missing {','.join(map(str, s))}")
        for s in self.spurious_in_families[:20]:
            lines.append(f"    spurious {','.join(map(str, s))}")
        return "\n".join(lines)


def verify_theorem1(
    max_len: int, max_entry: int, max_sequences: int = 2_000_000
) -> Theorem1Report:
    """Compare the filling oracle with the family generators on every
    minimal framing sequence inside the bounds."""
    total = sum((max_entry - 1) ** n for n in range(1, max_len + 1))
    gen = theorem1_families(max_len, max_entry)
    report = Theorem1Report(max_len, max_entry, 0, generated=set(gen))
    if total > max_sequences:
        report.complete = False
    budget = min(total, max_sequences)
    for n in range(1, max_len + 1):
        for f in itertools.product(range(2, max_entry + 1), repeat=n):
            if report.checked >= budget:
                return report
            report.checked += 1
            if has_filling_with_euler(cf_dual(f), 2):
                report.replaceable.add(f)
    return report
