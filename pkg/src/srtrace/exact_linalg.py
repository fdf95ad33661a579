"""Exact linear algebra over the rationals, prime fields, and the integers.

No floating point is used anywhere.  Ranks over the rationals come from
fraction-free Bareiss elimination on arbitrary-precision integers, prime
field ranks from modular Gaussian elimination, and integral structure
from a Smith normal form routine returning the elementary divisor chain
d1 | d2 | ... | dr.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterable, Sequence


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (p is None) or F_p, p < 2**31."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if self.p >= 2**31:
                raise ValueError("prime fields are capped below 2**31")
            if not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "Q" if self.p is None else f"F_{self.p}"


QQ = FieldSpec.rationals()
GF2 = FieldSpec.prime(2)
GF3 = FieldSpec.prime(3)


@dataclass(frozen=True)
class SparseIntMatrix:
    """Integer matrix stored as (row, col, value) triples, values nonzero."""

    rows: int
    cols: int
    entries: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        seen = set()
        for r, c, v in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r},{c}) outside a {self.rows}x{self.cols} matrix")
            if v == 0:
                raise ValueError("stored entries must be nonzero")
            if (r, c) in seen:
                raise ValueError(f"duplicate entry at ({r},{c})")
            seen.add((r, c))

    @classmethod
    def from_entries(
        cls, rows: int, cols: int, entries: Iterable[tuple[int, int, int]]
    ) -> "SparseIntMatrix":
        kept = tuple(sorted((r, c, v) for r, c, v in entries if v != 0))
        return cls(rows, cols, kept)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]]) -> "SparseIntMatrix":
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        entries = [
            (i, j, dense[i][j]) for i in range(rows) for j in range(cols) if dense[i][j]
        ]
        return cls.from_entries(rows, cols, entries)

    def todense(self) -> list[list[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for r, c, v in self.entries:
            dense[r][c] = v
        return dense


def rank_over_field(matrix: SparseIntMatrix, field: FieldSpec) -> int:
    """Rank of the matrix with entries read in the given field."""
    if matrix.rows == 0 or matrix.cols == 0 or not matrix.entries:
        return 0
    if field.is_rationals:
        return _rank_bareiss(matrix.todense())
    return _rank_mod_p(matrix.todense(), field.p)


def _rank_bareiss(a: list[list[int]]) -> int:
    # fraction-free elimination: each division below is exact because the
    # updated entries are minors of the original matrix
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, nrows):
            if a[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != rank:
            a[rank], a[pivot_row] = a[pivot_row], a[rank]
        top = a[rank]
        pivot = top[col]
        for i in range(rank + 1, nrows):
            row = a[i]
            factor = row[col]
            for j in range(col, ncols):
                row[j] = (pivot * row[j] - factor * top[j]) // prev
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank_mod_p(a: list[list[int]], p: int) -> int:
    nrows, ncols = len(a), len(a[0])
    for row in a:
        for j in range(ncols):
            row[j] %= p
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, nrows):
            if a[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != rank:
            a[rank], a[pivot_row] = a[pivot_row], a[rank]
        top = a[rank]
        inv = pow(top[col], -1, p)
        for i in range(rank + 1, nrows):
            row = a[i]
            if row[col]:
                factor = (row[col] * inv) % p
                for j in range(col, ncols):
                    row[j] = (row[j] - factor * top[j]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def smith_normal_form(matrix: SparseIntMatrix) -> tuple[int, tuple[int, ...]]:
    """Rank and elementary divisors d1 | d2 | ... | dr of an integer matrix.

    Greedy minimal-pivot diagonalization followed by a gcd/lcm pass that
    restores the divisibility chain; no transformation matrices are kept.
    """
    a = matrix.todense()
    nrows, ncols = matrix.rows, matrix.cols
    diag: list[int] = []
    t = 0
    while True:
        best = None
        best_abs = None
        for i in range(t, nrows):
            row = a[i]
            for j in range(t, ncols):
                v = row[j]
                if v and (best_abs is None or abs(v) < best_abs):
                    best = (i, j)
                    best_abs = abs(v)
                    if best_abs == 1:
                        break
            if best_abs == 1:
                break
        if best is None:
            break
        bi, bj = best
        if bi != t:
            a[t], a[bi] = a[bi], a[t]
        if bj != t:
            for row in a:
                row[t], row[bj] = row[bj], row[t]
        # clear row and column t; a nonzero remainder is strictly smaller
        # than the pivot, so promoting it makes progress
        while True:
            pivot = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q = a[i][t] // pivot
                    if q:
                        row, top = a[i], a[t]
                        for j in range(t, ncols):
                            row[j] -= q * top[j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // pivot
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
                        break
            if not dirty:
                break
        diag.append(abs(a[t][t]))
        t += 1
        if t == min(nrows, ncols):
            break
    divisors = _divisor_chain(diag)
    return len(divisors), divisors


def _divisor_chain(values: list[int]) -> tuple[int, ...]:
    d = sorted(values)
    changed = True
    while changed:
        changed = False
        for i in range(len(d) - 1):
            if d[i + 1] % d[i]:
                g = gcd(d[i], d[i + 1])
                d[i], d[i + 1] = g, d[i] * d[i + 1] // g
                changed = True
        d.sort()
    return tuple(d)
