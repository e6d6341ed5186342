"""Homology data for the exotic CP^2 # 6(-CP^2) construction.

The configuration ``C`` sits in CP^2 # 16(-CP^2) as eleven spheres
``u1..u11``; ``B`` is its Euler characteristic 2 replacement.  Classes are
transcribed by hand, so they live here as versioned data: fixing a
transcription means editing this table, not the code that checks it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .plumbing import (
    AmbientClass,
    Presentation,
    abelianization,
    boundary_class_order,
    forces_odd_form,
    glue_invariants,
    gram_matrix,
    pairing,
)
from .smith import cokernel, determinant, inertia

DATASET_VERSION = 1
AMBIENT = 16


def _c(h: int, **e: int) -> AmbientClass:
    return AmbientClass.build(h, AMBIENT, {int(k[1:]): v for k, v in e.items()})


def _sum(h: int, coeffs: dict[int, int]) -> AmbientClass:
    return AmbientClass.build(h, AMBIENT, coeffs)


H = _c(1)

U = (
    _sum(6, {1: -1, **{i: -2 for i in range(2, 10)}, 11: -2, 12: -2,
             **{i: -1 for i in range(13, 17)}}),
    _sum(3, {**{i: -1 for i in range(1, 10)}, 10: -2}),
    _c(0, e9=1, e14=-1, e15=-1, e16=-1),
    _c(0, e15=1, e16=-1),
    _c(0, e8=1, e9=-1),
    _c(0, e7=1, e8=-1),
    _c(0, e6=1, e7=-1),
    _c(0, e5=1, e6=-1),
    _c(0, e4=1, e5=-1),
    _c(0, e3=1, e4=-1),
    _c(1, e1=-1, e2=-1, e3=-1, e13=-1),
)

ALPHA = _sum(10, {1: -3, 2: -2, **{i: -3 for i in range(3, 10)}, 10: -2, 11: -1,
                  12: -2, 13: -2, 14: -3})

K = _sum(3, {i: -1 for i in range(1, AMBIENT + 1)})

# values stated alongside the classes
EXPECTED = {
    "alpha.alpha": 2,
    "K.alpha": -6,
    "h.alpha": 10,
    "alpha.u_i": 0,
    "boundary_h1_order": 1445,
    "sigma_C": -11,
    "K_boundary_multiple": 782,
    "pi1_B": 17,
    "chi": ((19, -15), (12, -11), (2, -1), (9, -5)),
}


def pi1_b_presentation(n: int = 9) -> Presentation:
    """Meridian presentation of ``pi_1(B)`` for the ``n``-th member of the
    family (``n = 9`` is the one embedded in CP^2 # 16(-CP^2)).

    Generators ``m1..m_{n+3}``; one relator per 2-handle.
    """
    if n < 2:
        raise ValueError("the family starts at n = 2")
    a, b = n + 2, n + 3
    rels = [(i, a, b) for i in range(1, n)]
    rels.append((n, n + 1, a, b))
    rels.append(tuple(range(1, n + 1)))
    rels.append(tuple(range(1, a + 1)))
    rels.append(tuple(range(1, n)) + (n + 1,))
    rels.append(tuple(range(1, n + 2)) + (b,))
    return Presentation(n + 3, tuple(rels))


def pairing_checks() -> list[tuple[str, int, int]]:
    """``(label, computed, expected)`` for every stated pairing."""
    rows = [
        ("alpha.alpha", pairing(ALPHA, ALPHA), EXPECTED["alpha.alpha"]),
        ("K.alpha", pairing(K, ALPHA), EXPECTED["K.alpha"]),
        ("h.alpha", pairing(H, ALPHA), EXPECTED["h.alpha"]),
    ]
    for i, u in enumerate(U, 1):
        rows.append((f"alpha.u{i}", pairing(ALPHA, u), 0))
    return rows


@dataclass
class GramReport:
    """Report-mode comparison of the transcribed configuration against the
    stated boundary homology and signature."""

    diagonal: tuple[int, ...]
    determinant: int
    inertia: tuple[int, int, int]
    boundary: str
    k_vector: tuple[int, ...]
    k_order: int | None
    bad_pairs: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def det_matches(self) -> bool:
        return abs(self.determinant) == EXPECTED["boundary_h1_order"]

    @property
    def signature(self) -> int:
        return self.inertia[0] - self.inertia[1]

    @property
    def signature_matches(self) -> bool:
        return self.signature == EXPECTED["sigma_C"]

    @property
    def k_order_matches(self) -> bool:
        n = EXPECTED["boundary_h1_order"]
        from math import gcd

        return self.k_order == n // gcd(n, EXPECTED["K_boundary_multiple"])

    def lines(self) -> list[str]:
        out = [
            f"dataset v{DATASET_VERSION}",
            f"gram diagonal {list(self.diagonal)}",
            f"det {self.determinant} (expected +-{EXPECTED['boundary_h1_order']}): "
            + ("match" if self.det_matches else "MISMATCH"),
            f"signature {self.signature} (expected {EXPECTED['sigma_C']}): "
            + ("match" if self.signature_matches else "MISMATCH"),
            f"coker {self.boundary}",
            f"K-vector {list(self.k_vector)} order {self.k_order} (expected 85): "
            + ("match" if self.k_order_matches else "MISMATCH"),
        ]
        for i, j, v in self.bad_pairs:
            out.append(f"  u{i}.u{j} = {v} (plumbing spheres meet in 0 or 1 point)")
        return out


def gram_report() -> GramReport:
    G = gram_matrix(U)
    n = len(U)
    bad = [
        (i + 1, j + 1, G[i][j])
        for i in range(n)
        for j in range(i + 1, n)
        if G[i][j] not in (0, 1)
    ]
    kv = tuple(pairing(K, u) for u in U)
    try:
        order = boundary_class_order(G, kv)
    except ValueError:
        order = None
    return GramReport(
        diagonal=tuple(G[i][i] for i in range(n)),
        determinant=determinant(G),
        inertia=inertia(G),
        boundary=str(cokernel(G)),
        k_vector=kv,
        k_order=order,
        bad_pairs=bad,
    )


def euler_signature_bookkeeping() -> tuple[int, int]:
    ambient, removed, glued, _ = EXPECTED["chi"]
    return glue_invariants(ambient, removed, glued)


def verify() -> list[tuple[str, bool, str]]:
    """Assert-mode checks: ``(label, ok, detail)``."""
    out = []
    for label, got, want in pairing_checks():
        out.append((label, got == want, f"{got} (expected {want})"))
    g = abelianization(pi1_b_presentation(9))
    out.append(("pi1(B) abelianized", str(g) == "Z17", str(g)))
    chi_sigma = euler_signature_bookkeeping()
    out.append(("chi/sigma of X", chi_sigma == EXPECTED["chi"][3], str(chi_sigma)))
    out.append(("odd form forced", forces_odd_form(chi_sigma[1]), f"sigma={chi_sigma[1]}"))
    out.append(("17 divides 782", EXPECTED["K_boundary_multiple"] % 17 == 0, "782 = 46*17"))
    return out
