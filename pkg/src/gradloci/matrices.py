"""Matrices over the parameter ring and over Q."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .ideals import Ideal
from .polyring import QQ, Polynomial, RingSpec, specialize

__all__ = [
    "PolyMatrix",
    "ScalarMatrix",
    "determinant",
    "minors",
    "minors_ideal",
    "generic_rank",
    "generic_rank_by_minors",
    "specialize_matrix",
    "block_diag",
]


@dataclass(frozen=True)
class ScalarMatrix:
    rows: tuple

    @classmethod
    def of(cls, rows) -> "ScalarMatrix":
        return cls(tuple(tuple(QQ.convert(x) for x in r) for r in rows))

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def rank(self) -> int:
        """Exact Gaussian elimination; the pivot is the entry of smallest height."""
        a = [list(r) for r in self.rows]
        nrows, ncols = self.shape
        rank = 0
        col = 0
        for col in range(ncols):
            best = None
            for i in range(rank, nrows):
                x = a[i][col]
                if x:
                    h = abs(x.numerator) * x.denominator
                    if best is None or h < best[0]:
                        best = (h, i)
            if best is None:
                continue
            p = best[1]
            a[rank], a[p] = a[p], a[rank]
            piv = a[rank][col]
            for i in range(rank + 1, nrows):
                f = a[i][col]
                if f:
                    q = f / piv
                    row = a[rank]
                    a[i] = [x - q * y for x, y in zip(a[i], row)]
            rank += 1
            if rank == nrows:
                break
        return rank

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)


class PolyMatrix:
    """A matrix whose entries are polynomials in the parameters only."""

    def __init__(self, ring: RingSpec, rows: Sequence[Sequence]):
        conv = []
        for r in rows:
            row = []
            for x in r:
                if isinstance(x, str):
                    x = ring.parse(x)
                elif not isinstance(x, Polynomial):
                    x = ring.const(x)
                if x.ring != ring:
                    raise ValueError("entry lives in a different ring")
                if not x.is_param_only():
                    raise ValueError(f"entry {x} involves fiber variables")
                row.append(x)
            conv.append(tuple(row))
        widths = {len(r) for r in conv}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        self.ring = ring
        self.rows = tuple(conv)

    @classmethod
    def from_json(cls, ring: RingSpec, text: str) -> "PolyMatrix":
        return cls(ring, json.loads(text))

    def to_json(self) -> str:
        return json.dumps([[str(x) for x in r] for r in self.rows])

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def entry(self, i, j) -> Polynomial:
        return self.rows[i][j]

    def transpose(self) -> "PolyMatrix":
        nr, nc = self.shape
        return PolyMatrix(self.ring, [[self.rows[i][j] for i in range(nr)] for j in range(nc)])

    def submatrix(self, rows, cols) -> list:
        return [[self.rows[i][j] for j in cols] for i in rows]

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)


def block_diag(*blocks: PolyMatrix) -> PolyMatrix:
    ring = blocks[0].ring
    total_cols = sum(b.shape[1] for b in blocks)
    rows = []
    off = 0
    for b in blocks:
        nr, nc = b.shape
        for r in b.rows:
            rows.append([ring.zero] * off + list(r) + [ring.zero] * (total_cols - off - nc))
        off += nc
    return PolyMatrix(ring, rows)


def _det_small(a):
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    # n == 3
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )


def _bareiss(a, ring):
    """Fraction-free elimination.  Returns ``(rank, last pivot, sign)``; for a
    square full-rank matrix ``sign * last pivot`` is the determinant."""
    a = [list(r) for r in a]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    prev = ring.one
    sign = 1
    rank = 0
    for col in range(ncols):
        piv_row = None
        best = None
        for i in range(rank, nrows):
            x = a[i][col]
            if x:
                size = len(x.terms)
                if best is None or size < best:
                    best, piv_row = size, i
        if piv_row is None:
            continue
        if piv_row != rank:
            a[rank], a[piv_row] = a[piv_row], a[rank]
            sign = -sign
        piv = a[rank][col]
        for i in range(rank + 1, nrows):
            for j in range(col + 1, ncols):
                v = piv * a[i][j] - a[i][col] * a[rank][j]
                a[i][j] = v.exact_div(prev) if not prev.is_constant() else v / prev.constant_coeff()
            a[i][col] = ring.zero
        prev = piv
        rank += 1
        if rank == nrows:
            break
    return rank, prev, sign


def determinant(a: Sequence[Sequence[Polynomial]], ring: RingSpec) -> Polynomial:
    n = len(a)
    if n == 0:
        return ring.one
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    if n <= 3:
        return _det_small(a)
    rank, piv, sign = _bareiss(a, ring)
    if rank < n:
        return ring.zero
    return piv * sign


def polynomial_minors(rows: Sequence[Sequence[Polynomial]], ring: RingSpec, r: int) -> list:
    """Nonzero ``r``-minors of an arbitrary polynomial matrix, deduplicated.

    Column index sets are the outer loop and row index sets the inner one,
    both in lexicographic order.
    """
    if r <= 0:
        raise ValueError("minor size must be positive")
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    out = []
    seen = set()
    if r > min(nr, nc):
        return out
    for cols in combinations(range(nc), r):
        for rs in combinations(range(nr), r):
            d = determinant([[rows[i][j] for j in cols] for i in rs], ring)
            if d and d not in seen:
                seen.add(d)
                out.append(d)
    return out


def minors(M: PolyMatrix, r: int) -> list:
    """All distinct nonzero ``r``-minors of ``M``."""
    return polynomial_minors(M.rows, M.ring, r)


def minors_ideal(M: PolyMatrix, r: int) -> Ideal:
    """Ideal of ``r``-minors.  ``r = 0`` gives the unit ideal (empty determinant)."""
    if r == 0:
        return Ideal.unit(M.ring)
    if r < 0:
        raise ValueError("negative minor size")
    return Ideal(M.ring, minors(M, r))


def generic_rank(M: PolyMatrix) -> int:
    """Rank over the fraction field of the parameter ring (fraction-free elimination)."""
    if not M.rows or not M.rows[0]:
        return 0
    rank, _, _ = _bareiss(M.rows, M.ring)
    return rank


def generic_rank_by_minors(M: PolyMatrix) -> int:
    """Oracle: largest ``r`` admitting a nonzero ``r``-minor."""
    nr, nc = M.shape
    for r in range(min(nr, nc), 0, -1):
        for cols in combinations(range(nc), r):
            for rows in combinations(range(nr), r):
                if determinant(M.submatrix(rows, cols), M.ring):
                    return r
    return 0


def specialize_matrix(M: PolyMatrix, point: Sequence) -> ScalarMatrix:
    if len(point) != M.ring.m:
        raise ValueError(f"point has {len(point)} coordinates, expected {M.ring.m}")
    rows = []
    for r in M.rows:
        rows.append(tuple(specialize(x, point).constant_coeff() for x in r))
    return ScalarMatrix(tuple(rows))
