"""The n-Queens graph and the exact certificate for its least eigenvalue.

Squares are addressed as ``(i, j)`` with ``i`` the row (top to bottom) and
``j`` the column (left to right), or by the linear index ``(i-1)*n + j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .bounds import lower_bound
from .ecp import EdgeCliquePartition
from .errors import CertificationFailed, InvalidSize, InvalidWindow
from .graph import Graph, adjacency_matrix, build_graph
from .linalg import IntMatrix, is_linearly_independent, mat_vec, nullity, rank_exact

DEFAULT_SIZE_CAP = 12

X4_LAYOUT = (
    (0, 1, -1, 0),
    (-1, 0, 0, 1),
    (1, 0, 0, -1),
    (0, -1, 1, 0),
)


def index_of(i: int, j: int, n: int) -> int:
    return (i - 1) * n + j


def coord_of(ell: int, n: int) -> tuple[int, int]:
    i = -(-ell // n)
    return i, ell + n - n * i


@dataclass(frozen=True)
class BoardVector:
    n: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.n * self.n:
            raise InvalidSize(f"board vector needs {self.n ** 2} entries, got {len(self.entries)}")

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.entries[index_of(i, j, self.n) - 1]

    def rows(self) -> list[list]:
        n = self.n
        return [list(self.entries[r * n : (r + 1) * n]) for r in range(n)]

    def support(self) -> set[tuple[int, int]]:
        return {coord_of(k + 1, self.n) for k, x in enumerate(self.entries) if x != 0}

    def render(self) -> str:
        cells = [[str(x) for x in row] for row in self.rows()]
        w = max(len(c) for row in cells for c in row)
        rule = "+" + "+".join("-" * (w + 2) for _ in range(self.n)) + "+"
        lines = [rule]
        for row in cells:
            lines.append("|" + "|".join(f" {c:>{w}} " for c in row) + "|")
            lines.append(rule)
        return "\n".join(lines)

    def to_json(self) -> list[list[int]]:
        return self.rows()


def _attacks(a: tuple[int, int], b: tuple[int, int]) -> bool:
    (i, j), (k, l) = a, b
    return a != b and (i == k or j == l or i + j == k + l or i - j == k - l)


def queens_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidSize(f"board size must be at least 1, got {n}")
    squares = list(product(range(1, n + 1), repeat=2))
    edges = [
        (index_of(*a, n), index_of(*b, n))
        for x, a in enumerate(squares)
        for b in squares[x + 1 :]
        if _attacks(a, b)
    ]
    return build_graph(n * n, edges)


def _lines(n: int) -> list[list[tuple[int, int]]]:
    """Rows, columns, then both diagonal families, each of length >= 2."""
    rng = range(1, n + 1)
    rows = [[(k, j) for j in rng] for k in rng]
    cols = [[(i, k) for i in rng] for k in rng]
    anti = [[(i, s - i) for i in rng if 1 <= s - i <= n] for s in range(3, 2 * n)]
    diag = [[(i, i - d) for i in rng if 1 <= i - d <= n] for d in range(2 - n, n - 1)]
    return rows + cols + anti + diag


def canonical_ecp(n: int) -> EdgeCliquePartition:
    """The ``6n - 6`` row, column and diagonal cliques."""
    if n < 2:
        raise InvalidSize(f"canonical ECP needs n >= 2, got {n}")
    return EdgeCliquePartition(tuple(tuple(sorted(index_of(i, j, n) for i, j in line)) for line in _lines(n)))


def constraint_matrix(n: int) -> IntMatrix:
    """``(6n - 2) x n^2`` system whose kernel is the -4 eigenspace of Q(n)."""
    if n < 4:
        raise InvalidSize(f"constraint system needs n >= 4, got {n}")
    rows = []
    for line in _lines(n):
        row = [0] * (n * n)
        for i, j in line:
            row[index_of(i, j, n) - 1] = 1
        rows.append(row)
    for i, j in ((1, 1), (1, n), (n, 1), (n, n)):
        row = [0] * (n * n)
        row[index_of(i, j, n) - 1] = 1
        rows.append(row)
    return IntMatrix.from_rows(rows, n * n)


def x4_seed() -> BoardVector:
    return BoardVector(4, tuple(x for row in X4_LAYOUT for x in row))


def basis_vector(n: int, a: int, b: int) -> BoardVector:
    """The seed pattern placed in the 4x4 window with top-left square ``(a, b)``."""
    if n < 4:
        raise InvalidSize(f"basis vectors need n >= 4, got {n}")
    if not (1 <= a <= n - 3 and 1 <= b <= n - 3):
        raise InvalidWindow(f"window ({a},{b}) outside [1..{n - 3}]^2", a=a, b=b)
    entries = [0] * (n * n)
    for i in range(a, a + 4):
        for j in range(b, b + 4):
            entries[index_of(i, j, n) - 1] = X4_LAYOUT[i - a][j - b]
    return BoardVector(n, tuple(entries))


def basis_family(n: int) -> list[BoardVector]:
    if n < 4:
        raise InvalidSize(f"basis family needs n >= 4, got {n}")
    k = n - 3
    return [basis_vector(n, a, b) for a in range(1, k + 1) for b in range(1, k + 1)]


def satisfies_conditions(X: BoardVector) -> bool:
    """Line sums and corner values checked by direct summation."""
    n = X.n
    if any(sum(X[i, j] for i, j in line) != 0 for line in _lines(n)):
        return False
    return all(X[c] == 0 for c in ((1, 1), (1, n), (n, 1), (n, n)))


@dataclass(frozen=True)
class QueensCertificate:
    n: int
    least_eigenvalue: int
    multiplicity: int
    constraint_rank: int
    basis: tuple[BoardVector, ...]

    def to_json(self, include_basis: bool = False) -> dict:
        out = {
            "n": self.n,
            "least_eigenvalue": self.least_eigenvalue,
            "multiplicity": self.multiplicity,
            "constraint_rank": self.constraint_rank,
            "basis_size": len(self.basis),
        }
        if include_basis:
            out["basis"] = [b.to_json() for b in self.basis]
        return out


def certify(n: int, size_cap: int = DEFAULT_SIZE_CAP) -> QueensCertificate:
    """Exactly verify least eigenvalue -4 with multiplicity ``(n-3)^2``.

    Check ids: ``basis_eigenvectors``, ``basis_rank``, ``eigenspace_nullity``,
    ``constraint_rank``, ``lower_bound``.
    """
    if not 4 <= n <= size_cap:
        raise InvalidSize(f"n must lie in 4..{size_cap}, got {n}")
    expected = (n - 3) ** 2
    Q = queens_graph(n)
    shifted = IntMatrix.from_rows(adjacency_matrix(Q), n * n).shifted(4)
    family = basis_family(n)

    def fail(check, **details):
        raise CertificationFailed(f"check {check} failed for n={n}", check=check, n=n, **details)

    zero = (Fraction(0),) * (n * n)
    if any(mat_vec(shifted, X.entries) != zero for X in family):
        fail("basis_eigenvectors")
    if len(family) != expected or not is_linearly_independent([X.entries for X in family]):
        fail("basis_rank")
    null = nullity(shifted)
    if null != expected:
        fail("eigenspace_nullity", found=null)
    rank = rank_exact(constraint_matrix(n))
    if rank != 6 * n - 9 or n * n - rank != null:
        fail("constraint_rank", found=rank)
    lb = lower_bound(Q, canonical_ecp(n))
    if lb != -4:
        fail("lower_bound", found=lb)
    return QueensCertificate(n, lb, null, rank, tuple(family))
