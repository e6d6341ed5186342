"""Planar positive factorizations as systems of hole subsets.

The page is a disk with ``h`` holes.  A convex curve is recorded by the set
of holes it encloses, so a factorization is an ordered list of nonempty
subsets of ``{1..h}``.  The total space is built from one 1-handle per hole
and one 2-handle per twist, which is all the homology below needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable, Mapping, Sequence

from .smith import AbelianGroup, Matrix, cokernel

__all__ = [
    "Factorization",
    "RewriteRule",
    "SubstitutionError",
    "euler_char_palf",
    "incidence",
    "h1_total",
    "boundary_h1_palf",
    "apply_rule",
    "lantern_rule",
    "daisy_rule",
    "DAISY_FORMS",
    "lantern_substitute",
    "daisy_substitute",
    "split_hole",
    "KeyPairReport",
    "key_pair_check",
    "SEED_X",
    "SEED_MIDDLE",
    "SEED_FINAL",
    "thm2a_bside",
    "NAMED",
]

Twist = frozenset


class SubstitutionError(ValueError):
    """A rewrite did not match its pattern or changed the boundary."""


@dataclass(frozen=True)
class Factorization:
    holes: int
    twists: tuple[Twist, ...]

    def __post_init__(self):
        if self.holes < 0:
            raise ValueError("negative hole count")
        fixed = tuple(frozenset(int(x) for x in t) for t in self.twists)
        for t in fixed:
            if not t:
                raise ValueError("empty twist subset")
            if min(t) < 1 or max(t) > self.holes:
                raise ValueError(f"twist {sorted(t)} not inside holes 1..{self.holes}")
        object.__setattr__(self, "twists", fixed)

    @classmethod
    def of(cls, holes: int, twists: Iterable[Iterable[int]]) -> "Factorization":
        return cls(holes, tuple(frozenset(t) for t in twists))

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "Factorization":
        try:
            return cls.of(int(data["holes"]), [[int(x) for x in t] for t in data["twists"]])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed factorization: {exc}") from exc

    def to_json(self) -> dict:
        return {"holes": self.holes, "twists": [sorted(t) for t in self.twists]}

    def __len__(self):
        return len(self.twists)

    def __str__(self):
        body = " ".join("{" + ",".join(map(str, sorted(t))) + "}" for t in self.twists)
        return f"h={self.holes}: {body}"


def euler_char_palf(f: Factorization) -> int:
    return 1 - f.holes + len(f.twists)


def incidence(f: Factorization) -> Matrix:
    """Holes x twists 0/1 matrix."""
    return [[int(i in t) for t in f.twists] for i in range(1, f.holes + 1)]


def h1_total(f: Factorization) -> AbelianGroup:
    """Each twist kills the sum of the meridians of the holes it encloses."""
    if not f.twists:
        return AbelianGroup(f.holes, ())
    return cokernel(incidence(f))


def _linking(f: Factorization) -> Matrix:
    h, t = f.holes, len(f.twists)
    B = incidence(f)
    M = [[0] * (h + t) for _ in range(h + t)]
    for i in range(h):
        for j in range(t):
            M[i][h + j] = M[h + j][i] = B[i][j]
    for j in range(t):
        M[h + j][h + j] = -1
    return M


def boundary_h1_palf(f: Factorization) -> AbelianGroup:
    """H_1 of the boundary, from the handle diagram: dotted circles as
    0-framed unknots, vanishing cycles (on separate pages, so mutually
    unlinked) framed -1."""
    if f.holes + len(f.twists) == 0:
        return AbelianGroup(0, ())
    return cokernel(_linking(f))


# -- rewriting ---------------------------------------------------------------


@dataclass(frozen=True)
class RewriteRule:
    """Replace the multiset ``lhs`` by the word ``rhs``."""

    name: str
    lhs: tuple[Twist, ...]
    rhs: tuple[Twist, ...]


def _multiset(ts: Iterable[Twist]) -> dict[Twist, int]:
    out: dict[Twist, int] = {}
    for t in ts:
        out[t] = out.get(t, 0) + 1
    return out


def apply_rule(
    f: Factorization, rule: RewriteRule, positions: Sequence[int], validate: bool = True
) -> Factorization:
    """Remove the twists at ``positions`` (0-based) and insert ``rule.rhs``
    where the first of them stood.  The removed twists must be exactly
    ``rule.lhs`` as a multiset."""
    pos = list(positions)
    if len(set(pos)) != len(pos):
        raise SubstitutionError("repeated position")
    if any(not 0 <= p < len(f.twists) for p in pos):
        raise SubstitutionError("position out of range")
    if _multiset(f.twists[p] for p in pos) != _multiset(rule.lhs):
        raise SubstitutionError(f"{rule.name}: twists at {pos} do not match the pattern")
    if any(not t for t in rule.rhs):
        raise SubstitutionError(f"{rule.name}: right-hand side has an empty subset")
    site = min(pos)
    drop = set(pos)
    out: list[Twist] = []
    for i, t in enumerate(f.twists):
        if i == site:
            out.extend(rule.rhs)
        if i not in drop:
            out.append(t)
    g = Factorization(f.holes, tuple(out))
    if validate:
        before, after = boundary_h1_palf(f), boundary_h1_palf(g)
        if before != after:
            raise SubstitutionError(
                f"{rule.name} changed the boundary homology: {before} -> {after}"
            )
    return g


def _disjoint(parts: Sequence[Twist]) -> bool:
    return sum(len(p) for p in parts) == len(frozenset().union(*parts))


def lantern_rule(a: Twist, b: Twist, c: Twist) -> RewriteRule:
    a, b, c = frozenset(a), frozenset(b), frozenset(c)
    if not (a and b and c) or not _disjoint((a, b, c)):
        raise SubstitutionError("lantern needs three nonempty disjoint subsets")
    return RewriteRule("lantern", (a, b, c, a | b | c), (a | b, a | c, b | c))


def _daisy_petal_unions(center, petals, full):
    return tuple(center | p for p in petals) + (full - center,)


def _daisy_complements(center, petals, full):
    return (full - center,) + tuple(full - p for p in petals)


# Alternate right-hand sides can be registered here; application still
# validates the boundary, so a wrong form is rejected rather than trusted.
DAISY_FORMS: dict[str, Callable[[Twist, Sequence[Twist], Twist], tuple[Twist, ...]]] = {
    "petal-unions": _daisy_petal_unions,
    "complements": _daisy_complements,
}


def daisy_rule(center: Twist, petals: Sequence[Twist], form: str = "petal-unions") -> RewriteRule:
    center = frozenset(center)
    petals = [frozenset(p) for p in petals]
    k = len(petals)
    if k < 2:
        raise SubstitutionError("daisy needs at least two petals")
    if not center or not all(petals) or not _disjoint([center, *petals]):
        raise SubstitutionError("daisy center and petals must be nonempty and disjoint")
    try:
        rhs_of = DAISY_FORMS[form]
    except KeyError:
        raise SubstitutionError(f"unknown daisy form {form!r}") from None
    full = center.union(*petals)
    lhs = (center,) * (k - 1) + tuple(petals) + (full,)
    return RewriteRule(f"daisy{k}", lhs, rhs_of(center, petals, full))


def lantern_substitute(f: Factorization, a: int, b: int, c: int, full: int) -> Factorization:
    """Lantern on the twists at positions ``a, b, c`` (disjoint subsets) and
    ``full`` (their union).  Word-order side conditions are the caller's."""
    rule = lantern_rule(*(_at(f, p) for p in (a, b, c)))
    return apply_rule(f, rule, (a, b, c, full))


def daisy_substitute(
    f: Factorization,
    center: Sequence[int],
    petals: Sequence[int],
    full: int,
    form: str = "petal-unions",
) -> Factorization:
    """Daisy relation: ``center`` lists the k-1 positions holding the center
    subset, ``petals`` the k petal positions, ``full`` the boundary-parallel
    twist around all of them."""
    if len(center) != len(petals) - 1:
        raise SubstitutionError("daisy_k needs the center k-1 times and k petals")
    subsets = {_at(f, p) for p in center}
    if len(subsets) != 1:
        raise SubstitutionError("center positions hold different subsets")
    rule = daisy_rule(subsets.pop(), [_at(f, p) for p in petals], form)
    return apply_rule(f, rule, (*center, *petals, full))


def _at(f: Factorization, p: int) -> Twist:
    if not 0 <= p < len(f.twists):
        raise SubstitutionError(f"position {p} out of range")
    return f.twists[p]


def split_hole(
    f: Factorization,
    j: int,
    reassignment: Mapping[int, str],
    appended: Iterable[Iterable[int]] = (),
) -> Factorization:
    """Split hole ``j`` into ``j`` (left) and ``j+1`` (right); later holes
    shift up by one.

    ``reassignment`` sends every twist position containing ``j`` to
    ``"left"``, ``"right"`` or ``"both"``.  ``appended`` twists use the new
    numbering and go at the end.  Nothing is validated homologically here.
    """
    if not 1 <= j <= f.holes:
        raise ValueError(f"hole {j} not in 1..{f.holes}")
    owners = {i for i, t in enumerate(f.twists) if j in t}
    if set(reassignment) != owners:
        raise ValueError(
            f"reassignment must cover exactly the twists containing hole {j}: {sorted(owners)}"
        )
    out = []
    for i, t in enumerate(f.twists):
        moved = {x + 1 if x > j else x for x in t if x != j}
        if i in owners:
            side = reassignment[i]
            if side not in ("left", "right", "both"):
                raise ValueError(f"bad side {side!r}")
            if side in ("left", "both"):
                moved.add(j)
            if side in ("right", "both"):
                moved.add(j + 1)
        out.append(frozenset(moved))
    out.extend(frozenset(t) for t in appended)
    return Factorization(f.holes + 1, tuple(out))


@dataclass(frozen=True)
class KeyPairReport:
    euler_c: int
    euler_b: int
    boundary_c: AbelianGroup
    boundary_b: AbelianGroup
    h1_b: AbelianGroup

    @property
    def boundary_match(self) -> bool:
        return self.boundary_c == self.boundary_b

    def lines(self) -> list[str]:
        return [
            f"euler c={self.euler_c} b={self.euler_b}",
            f"boundary c={self.boundary_c} b={self.boundary_b} "
            + ("match" if self.boundary_match else "MISMATCH"),
            f"H1(b)={self.h1_b}",
        ]


def key_pair_check(c_side: Factorization, b_side: Factorization) -> KeyPairReport:
    if c_side.holes != b_side.holes:
        raise ValueError(f"hole counts differ: {c_side.holes} vs {b_side.holes}")
    return KeyPairReport(
        euler_char_palf(c_side),
        euler_char_palf(b_side),
        boundary_h1_palf(c_side),
        boundary_h1_palf(b_side),
        h1_total(b_side),
    )


# -- named systems -----------------------------------------------------------

FULL5 = range(1, 6)

# x0^2 x1 x2 x3 y x4 x5^2 on a disk with five holes
SEED_X = Factorization.of(5, [{1}, {1}, {2}, {3}, {4}, {1, 2, 3}, {5}, FULL5, FULL5])

# after the lantern on x3 y x4 x5
SEED_MIDDLE = Factorization.of(
    5, [{1}, {1}, {2}, {3}, {4, 5}, {1, 2, 3, 4}, {1, 2, 3, 5}, FULL5]
)

# after the daisy on x0^2 x1 x2 z x5
SEED_FINAL = Factorization.of(
    5, [{1, 2}, {1, 3}, {1, 4, 5}, {2, 3, 4, 5}, {1, 2, 3, 4}, {1, 2, 3, 5}]
)


def thm2a_bside(n: int) -> Factorization:
    """Euler characteristic 2 side of the m = 3 family on ``n + 3`` holes."""
    if n < 2:
        raise ValueError("the family starts at n = 2")
    a, b = n + 2, n + 3
    tw = [{i, a, b} for i in range(1, n)]
    tw.append({n, n + 1, a, b})
    tw.append(set(range(1, n + 1)))
    tw.append(set(range(1, a + 1)))
    tw.append(set(range(1, n)) | {n + 1})
    tw.append(set(range(1, n + 2)) | {b})
    return Factorization.of(n + 3, tw)


NAMED: dict[str, Callable[..., Factorization]] = {
    "seed-x": lambda: SEED_X,
    "seed-middle": lambda: SEED_MIDDLE,
    "seed-final": lambda: SEED_FINAL,
    "thm2a-bside": thm2a_bside,
}
