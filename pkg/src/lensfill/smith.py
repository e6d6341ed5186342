"""Exact integer linear algebra: Smith normal form, cokernels, inertia.

Matrices are plain lists of lists of Python ints, so sizes are bounded only
by patience and entries never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

__all__ = [
    "Matrix",
    "SmithForm",
    "AbelianGroup",
    "smith_normal_form",
    "invariant_factors",
    "cokernel",
    "class_order",
    "determinant",
    "inertia",
    "signature",
    "matmul",
    "identity",
]

Matrix = list[list[int]]


def _copy(M: Sequence[Sequence[int]]) -> Matrix:
    return [[int(x) for x in row] for row in M]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [
        [sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(len(A))
    ]


def _shape(M: Sequence[Sequence[int]]) -> tuple[int, int]:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if any(len(r) != cols for r in M):
        raise ValueError("ragged matrix")
    return rows, cols


@dataclass(frozen=True)
class SmithForm:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal.

    ``factors`` are the diagonal entries ``d1 | d2 | ...`` (nonnegative,
    zeros last), one per ``min(rows, cols)``.
    """

    factors: tuple[int, ...]
    U: Matrix
    V: Matrix
    D: Matrix


def smith_normal_form(M: Sequence[Sequence[int]]) -> SmithForm:
    A = _copy(M)
    m, n = _shape(A)
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in (A, V):
            for row in R:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        for R in (A, U):
            rs, rd = R[src], R[dst]
            for k in range(len(rd)):
                rd[k] += c * rs[k]

    def add_col(dst, src, c):
        for R in (A, V):
            for row in R:
                row[dst] += c * row[src]

    def smallest(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        return best

    for t in range(min(m, n)):
        # Re-pick the smallest entry of the whole trailing block on every
        # pass; pivoting only within row/column t lets entries explode.
        while True:
            best = smallest(t)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            if any(A[i][t] for i in range(t + 1, m)) or any(A[t][j] for j in range(t + 1, n)):
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if best is None:
            break
        if A[t][t] < 0:
            for R in (A, U):
                R[t] = [-x for x in R[t]]

    factors = tuple(A[i][i] for i in range(min(m, n)))
    return SmithForm(factors, U, V, A)


def invariant_factors(M: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return smith_normal_form(M).factors


@dataclass(frozen=True)
class AbelianGroup:
    """A finitely generated abelian group ``Z^rank + Z/t1 + ... + Z/tk``
    with ``t1 | t2 | ... | tk`` and every ``ti > 1``."""

    rank: int
    torsion: tuple[int, ...]

    @classmethod
    def from_factors(cls, factors: Sequence[int], generators: int) -> "AbelianGroup":
        """Cokernel of a map into ``Z^generators`` with the given Smith factors."""
        nonzero = [d for d in factors if d != 0]
        return cls(generators - len(nonzero), tuple(d for d in nonzero if d > 1))

    @property
    def order(self) -> int | None:
        if self.rank:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def is_cyclic(self) -> bool:
        return self.rank + len(self.torsion) <= 1

    def __str__(self):
        parts = [f"Z{t}" for t in self.torsion]
        if self.rank:
            parts.insert(0, "Z" if self.rank == 1 else f"Z^{self.rank}")
        return " + ".join(parts) if parts else "0"


def cokernel(M: Sequence[Sequence[int]]) -> AbelianGroup:
    """``Z^rows / image(M)`` for ``M`` acting on column vectors."""
    rows, _ = _shape(M)
    return AbelianGroup.from_factors(invariant_factors(M), rows)


def class_order(M: Sequence[Sequence[int]], v: Sequence[int]) -> int:
    """Order of ``v`` in ``Z^n / image(M)`` for square nonsingular ``M``."""
    rows, cols = _shape(M)
    if rows != cols:
        raise ValueError("class_order needs a square matrix")
    snf = smith_normal_form(M)
    if any(d == 0 for d in snf.factors):
        raise ValueError("matrix is singular; the cokernel has free part")
    w = [sum(snf.U[i][k] * v[k] for k in range(rows)) for i in range(rows)]
    order = 1
    for d, x in zip(snf.factors, w):
        order = lcm(order, d // gcd(d, x))
    return order


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = _copy(M)
    n, c = _shape(A)
    if n != c:
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def inertia(M: Sequence[Sequence[int | Fraction]]) -> tuple[int, int, int]:
    """``(n_plus, n_minus, n_zero)`` of a symmetric matrix, by congruence.

    Diagonal pivots are eliminated symmetrically; when every diagonal entry
    is zero, a row/column pair ``i, j`` with ``M[i][j] != 0`` is merged to
    create the nonzero pivot ``2 * M[i][j]``.
    """
    A = [[Fraction(x) for x in row] for row in M]
    n, c = _shape(A)
    if n != c or any(A[i][j] != A[j][i] for i in range(n) for j in range(i)):
        raise ValueError("inertia needs a symmetric matrix")
    pos = neg = zero = 0
    while A:
        size = len(A)
        k = next((i for i in range(size) if A[i][i] != 0), None)
        if k is None:
            pair = next(
                ((i, j) for i in range(size) for j in range(i + 1, size) if A[i][j] != 0),
                None,
            )
            if pair is None:
                zero += size
                break
            i, j = pair
            for r in range(size):
                A[i][r] += A[j][r]
            for r in range(size):
                A[r][i] += A[r][j]
            k = i
        d = A[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        col = [A[r][k] for r in range(size)]
        keep = [r for r in range(size) if r != k]
        A = [[A[r][s] - col[r] * col[s] / d for s in keep] for r in keep]
    return pos, neg, zero


def signature(M: Sequence[Sequence[int]]) -> int:
    p, q, _ = inertia(M)
    return p - q
