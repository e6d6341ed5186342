"""Plumbing trees, group presentations and classes in CP^2 # N(-CP^2).

Everything reduces to integer matrices handled in :mod:`lensfill.smith`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Sequence

from .smith import (
    AbelianGroup,
    Matrix,
    class_order,
    cokernel,
    determinant,
    inertia,
)

__all__ = [
    "PlumbingTree",
    "intersection_matrix",
    "signature_exact",
    "boundary_h1",
    "tree_invariants",
    "Presentation",
    "abelianization",
    "AmbientClass",
    "pairing",
    "gram_matrix",
    "boundary_class_order",
    "glue_invariants",
    "forces_odd_form",
]


@dataclass(frozen=True)
class PlumbingTree:
    """Disk bundles over spheres plumbed along a tree.

    ``vertices`` is a tuple of ``(id, framing)``; ``edges`` a tuple of id
    pairs.  Matrix rows follow the order of ``vertices``.
    """

    vertices: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        ids = [v for v, _ in self.vertices]
        if not ids:
            raise ValueError("a plumbing tree needs at least one vertex")
        if len(set(ids)) != len(ids):
            raise ValueError("vertex ids must be unique")
        known = set(ids)
        seen_edges = set()
        for a, b in self.edges:
            if a not in known or b not in known:
                raise ValueError(f"edge ({a},{b}) uses an unknown vertex")
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            key = frozenset((a, b))
            if key in seen_edges:
                raise ValueError(f"repeated edge ({a},{b})")
            seen_edges.add(key)
        if len(self.edges) != len(ids) - 1:
            raise ValueError("a tree on n vertices has n-1 edges")
        # connected + n-1 edges => tree
        adj: dict[int, list[int]] = {v: [] for v in ids}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        stack, reached = [ids[0]], {ids[0]}
        while stack:
            for w in adj[stack.pop()]:
                if w not in reached:
                    reached.add(w)
                    stack.append(w)
        if reached != known:
            raise ValueError("plumbing graph is not connected")

    @classmethod
    def chain(cls, framings: Sequence[int]) -> "PlumbingTree":
        """Linear plumbing; framings are taken as given, e.g. ``[-2, -4, -4, -2]``."""
        verts = tuple((i, int(e)) for i, e in enumerate(framings))
        edges = tuple((i, i + 1) for i in range(len(framings) - 1))
        return cls(verts, edges)

    @classmethod
    def star(cls, center: int, legs: Sequence[Sequence[int]]) -> "PlumbingTree":
        verts = [(0, int(center))]
        edges = []
        nxt = 1
        for leg in legs:
            prev = 0
            for e in leg:
                verts.append((nxt, int(e)))
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
        return cls(tuple(verts), tuple(edges))

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "PlumbingTree":
        try:
            verts = tuple((int(v["id"]), int(v["framing"])) for v in data["vertices"])
            edges = tuple((int(a), int(b)) for a, b in data["edges"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed plumbing tree: {exc}") from exc
        return cls(verts, edges)

    def to_json(self) -> dict:
        return {
            "vertices": [{"id": v, "framing": e} for v, e in self.vertices],
            "edges": [list(e) for e in self.edges],
        }

    def __len__(self):
        return len(self.vertices)


def intersection_matrix(t: PlumbingTree) -> Matrix:
    """Framings on the diagonal, 1 for each edge."""
    index = {v: i for i, (v, _) in enumerate(t.vertices)}
    n = len(t.vertices)
    M = [[0] * n for _ in range(n)]
    for i, (_, e) in enumerate(t.vertices):
        M[i][i] = e
    for a, b in t.edges:
        M[index[a]][index[b]] = M[index[b]][index[a]] = 1
    return M


def signature_exact(M: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """Exact inertia ``(n_plus, n_minus, n_zero)`` of a symmetric integer matrix."""
    return inertia(M)


def boundary_h1(t: PlumbingTree) -> AbelianGroup:
    """First homology of the boundary 3-manifold: coker of the intersection form."""
    return cokernel(intersection_matrix(t))


def tree_invariants(t: PlumbingTree) -> dict:
    M = intersection_matrix(t)
    pos, neg, zero = inertia(M)
    return {
        "chi": 1 + len(t),
        "sigma": pos - neg,
        "inertia": (pos, neg, zero),
        "det": determinant(M),
        "h1": boundary_h1(t),
    }


@dataclass(frozen=True)
class Presentation:
    """Generators ``1..g``; relators are words of signed generator indices."""

    generators: int
    relators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.generators < 0:
            raise ValueError("negative generator count")
        for word in self.relators:
            for x in word:
                if x == 0 or abs(x) > self.generators:
                    raise ValueError(f"letter {x} out of range 1..{self.generators}")

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "Presentation":
        try:
            g = int(data["generators"])
            rels = tuple(tuple(int(x) for x in w) for w in data["relators"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed presentation: {exc}") from exc
        return cls(g, rels)

    def to_json(self) -> dict:
        return {"generators": self.generators, "relators": [list(w) for w in self.relators]}

    def exponent_matrix(self) -> Matrix:
        """Generators x relators matrix of exponent sums."""
        M = [[0] * len(self.relators) for _ in range(self.generators)]
        for j, word in enumerate(self.relators):
            for x in word:
                M[abs(x) - 1][j] += 1 if x > 0 else -1
        return M


def abelianization(P: Presentation) -> AbelianGroup:
    if not P.relators:
        return AbelianGroup(P.generators, ())
    return cokernel(P.exponent_matrix())


@dataclass(frozen=True)
class AmbientClass:
    """``h_coeff * h + sum(e[i] * e_{i+1})`` in ``H_2(CP^2 # N(-CP^2))``,
    where ``h^2 = 1`` and ``e_i^2 = -1``."""

    h: int
    e: tuple[int, ...]

    @classmethod
    def build(cls, h: int, n: int, e: Mapping[int, int] | None = None) -> "AmbientClass":
        """``e`` maps 1-based exceptional indices to coefficients."""
        coeffs = [0] * n
        for i, c in (e or {}).items():
            if not 1 <= i <= n:
                raise ValueError(f"e_{i} outside 1..{n}")
            coeffs[i - 1] += c
        return cls(h, tuple(coeffs))

    @property
    def ambient(self) -> int:
        return len(self.e)

    def __add__(self, other: "AmbientClass") -> "AmbientClass":
        _same_ambient(self, other)
        return AmbientClass(self.h + other.h, tuple(a + b for a, b in zip(self.e, other.e)))

    def __neg__(self):
        return AmbientClass(-self.h, tuple(-a for a in self.e))

    def __sub__(self, other):
        return self + (-other)

    def __str__(self):
        terms = [f"{self.h}h"] if self.h else []
        for i, c in enumerate(self.e, 1):
            if c:
                terms.append(f"{c:+d}e{i}")
        return " ".join(terms) or "0"


def _same_ambient(x: AmbientClass, y: AmbientClass) -> None:
    if x.ambient != y.ambient:
        raise ValueError(f"ambient mismatch: N={x.ambient} vs N={y.ambient}")


def pairing(x: AmbientClass, y: AmbientClass) -> int:
    _same_ambient(x, y)
    return x.h * y.h - sum(a * b for a, b in zip(x.e, y.e))


def gram_matrix(classes: Sequence[AmbientClass]) -> Matrix:
    return [[pairing(x, y) for y in classes] for x in classes]


def boundary_class_order(M: Sequence[Sequence[int]], v: Sequence[int]) -> int:
    """Order of ``v`` in ``coker(M)``; for a plumbing's intersection form this
    is the order of the corresponding class in ``H_1`` of the boundary."""
    return class_order(M, v)


def glue_invariants(
    ambient: tuple[int, int], removed: tuple[int, int], glued: tuple[int, int]
) -> tuple[int, int]:
    """``(chi, sigma)`` after cutting ``removed`` out of ``ambient`` and
    gluing ``glued`` in along the same boundary."""
    return (
        ambient[0] - removed[0] + glued[0],
        ambient[1] - removed[1] + glued[1],
    )


def forces_odd_form(sigma: int) -> bool:
    """A smooth closed simply connected 4-manifold with even form has
    signature divisible by 16; any other signature forces an odd form."""
    return sigma % 16 != 0

