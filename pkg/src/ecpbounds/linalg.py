"""Exact linear algebra over the integers and rationals.

Rank is computed by fraction-free (Bareiss) elimination on Python integers;
kernels are solved over :class:`fractions.Fraction` from the echelon form and
returned as primitive integer vectors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

from .errors import DimMismatch, ParseError

RationalVector = tuple[Fraction, ...]


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        entries = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if any(len(r) != cols for r in entries):
            raise DimMismatch("ragged matrix rows")
        return cls(len(entries), cols, entries)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls.from_rows([[0] * cols for _ in range(rows)], cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "IntMatrix":
        if self.rows == 0:
            return IntMatrix(self.cols, 0, ((),) * self.cols)
        return IntMatrix.from_rows([list(c) for c in zip(*self.entries)], self.rows)

    def shifted(self, d: int) -> "IntMatrix":
        """``M + d*I`` for square ``M``."""
        if self.rows != self.cols:
            raise DimMismatch("diagonal shift needs a square matrix")
        return IntMatrix.from_rows(
            [[x + d * (i == j) for j, x in enumerate(r)] for i, r in enumerate(self.entries)], self.cols
        )

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.entries]

    @classmethod
    def from_json(cls, data, cols: int | None = None) -> "IntMatrix":
        try:
            if isinstance(data, str):
                data = json.loads(data)
            return cls.from_rows([[int(x) for x in r] for r in data], cols)
        except (ValueError, TypeError) as exc:
            raise ParseError(f"malformed matrix JSON: {exc}") from exc


def as_matrix(M) -> IntMatrix:
    return M if isinstance(M, IntMatrix) else IntMatrix.from_rows(M)


def _bareiss_echelon(M: IntMatrix) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form and the pivot columns.

    Pivot is the first nonzero entry in the column at or below the current row.
    Every intermediate entry is a minor of ``M``, so the divisions are exact.
    """
    a = [list(r) for r in M.entries]
    nrows, ncols = M.rows, M.cols
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        piv_row = a[r]
        piv = piv_row[c]
        tail = piv_row[c + 1 :]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            if f == 0:
                if piv != prev:
                    row[c + 1 :] = [(piv * x) // prev for x in row[c + 1 :]]
                continue
            row[c + 1 :] = [(piv * x - f * y) // prev for x, y in zip(row[c + 1 :], tail)]
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return a, pivots


def rank_exact(M) -> int:
    M = as_matrix(M)
    return len(_bareiss_echelon(M)[1])


def _primitive(vec: Sequence[Fraction]) -> RationalVector:
    den = reduce(lambda x, y: x * y // gcd(x, y), (f.denominator for f in vec), 1)
    ints = [int(f * den) for f in vec]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(Fraction(0) for _ in vec)
    first = next(x for x in ints if x != 0)
    if first < 0:
        g = -g
    return tuple(Fraction(x // g) for x in ints)


def kernel_basis(M) -> list[RationalVector]:
    """Basis of the right null space, one vector per free column.

    Each vector is scaled to coprime integers with first nonzero entry positive.
    """
    M = as_matrix(M)
    echelon, pivots = _bareiss_echelon(M)
    rank = len(pivots)
    rows = [[Fraction(x) for x in echelon[i]] for i in range(rank)]
    pivot_set = set(pivots)
    free = [c for c in range(M.cols) if c not in pivot_set]
    basis = []
    for f in free:
        x = [Fraction(0)] * M.cols
        x[f] = Fraction(1)
        for i in range(rank - 1, -1, -1):
            row = rows[i]
            c = pivots[i]
            s = sum((row[j] * x[j] for j in range(c + 1, M.cols) if row[j] and x[j]), Fraction(0))
            x[c] = -s / row[c]
        basis.append(_primitive(x))
    return basis


def mat_vec(M, x: Sequence) -> RationalVector:
    M = as_matrix(M)
    if len(x) != M.cols:
        raise DimMismatch(f"matrix has {M.cols} columns, vector has {len(x)} entries")
    xs = [Fraction(v) for v in x]
    return tuple(sum((a * b for a, b in zip(row, xs) if a), Fraction(0)) for row in M.entries)


def is_linearly_independent(vectors: Sequence[Sequence]) -> bool:
    vectors = [tuple(Fraction(v) for v in vec) for vec in vectors]
    if not vectors:
        return True
    dim = len(vectors[0])
    if any(len(v) != dim for v in vectors):
        raise DimMismatch("vectors of different dimension")
    rows = []
    for v in vectors:
        den = reduce(lambda a, b: a * b // gcd(a, b), (f.denominator for f in v), 1)
        rows.append([int(f * den) for f in v])
    return rank_exact(IntMatrix.from_rows(rows, dim)) == len(vectors)


def nullity(M) -> int:
    M = as_matrix(M)
    return M.cols - rank_exact(M)


def rational_to_str(q: Fraction) -> str:
    return str(Fraction(q))


def vector_to_json(v: Sequence) -> list[str]:
    return [rational_to_str(x) for x in v]
