"""Least-eigenvalue bounds from edge clique partitions.

For an ECP ``P`` with maximum clique degree ``m``, every eigenvalue is at least
``-m``; ``-m`` is an eigenvalue exactly when some nonzero ``x`` sums to zero on
every part and vanishes at every vertex whose clique degree is below ``m``.
That kernel is the whole ``-m`` eigenspace.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .ecp import (
    DEFAULT_EDGE_BUDGET,
    EdgeCliquePartition,
    clique_degree_profile,
    enumerate_ecps,
    validate_ecp,
)
from .errors import NoEdges, NotAttained
from .graph import Graph, induced_subgraph
from .linalg import IntMatrix, RationalVector, kernel_basis, vector_to_json
from .spectra import least_eigenvalue


@dataclass(frozen=True)
class AttainmentCertificate:
    m: int
    kernel: tuple[RationalVector, ...]
    constraint_rows: int

    @property
    def attained(self) -> bool:
        return bool(self.kernel)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "attained": self.attained,
            "kernel": [vector_to_json(v) for v in self.kernel],
            "constraint_rows": self.constraint_rows,
        }


@dataclass(frozen=True)
class Sandwich:
    """Certified interval ``lower <= lambda_min <= upper``."""

    lower: int
    upper: int

    @property
    def exact(self) -> int | None:
        return self.lower if self.lower == self.upper else None


def _checked(G: Graph, P: EdgeCliquePartition) -> EdgeCliquePartition:
    if not G.edges:
        raise NoEdges("bounds need a graph with at least one edge")
    return validate_ecp(G, P.parts)


def lower_bound(G: Graph, P: EdgeCliquePartition) -> int:
    P = _checked(G, P)
    return -clique_degree_profile(G, P).maximum


def attainment_matrix(G: Graph, P: EdgeCliquePartition) -> IntMatrix:
    """Zero-sum row per part, then a unit row per vertex of non-maximal clique degree."""
    profile = clique_degree_profile(G, P)
    rows = []
    for part in P.parts:
        row = [0] * G.n
        for v in part:
            row[v - 1] = 1
        rows.append(row)
    for v in G.vertices:
        if profile[v] != profile.maximum:
            row = [0] * G.n
            row[v - 1] = 1
            rows.append(row)
    return IntMatrix.from_rows(rows, G.n)


def attainment(G: Graph, P: EdgeCliquePartition) -> AttainmentCertificate:
    P = _checked(G, P)
    m = clique_degree_profile(G, P).maximum
    M = attainment_matrix(G, P)
    return AttainmentCertificate(m, tuple(kernel_basis(M)), M.rows)


def upper_bound_via_subgraph(G: Graph, S, P_sub: EdgeCliquePartition) -> int:
    """``-m_H(P_sub)`` for the induced subgraph ``H = G[S]``, if ``P_sub`` attains on ``H``.

    ``P_sub`` is expressed in the labels of ``H`` (sorted order of ``S``).
    """
    H, _ = induced_subgraph(G, S)
    cert = attainment(H, P_sub)
    if not cert.attained:
        raise NotAttained(f"subgraph ECP does not attain -{cert.m}", m=cert.m)
    return -cert.m


def sandwich(G: Graph, P: EdgeCliquePartition, S, P_sub: EdgeCliquePartition) -> Sandwich:
    return Sandwich(lower_bound(G, P), upper_bound_via_subgraph(G, S, P_sub))


def content_spectral_bound(G: Graph, tol: float = 1e-8) -> int:
    if not G.edges:
        raise NoEdges("content bound needs at least one edge")
    return math.ceil(-least_eigenvalue(G) - tol)


def min_m_over_ecps(G: Graph, max_edges: int = DEFAULT_EDGE_BUDGET) -> tuple[int, EdgeCliquePartition]:
    if not G.edges:
        raise NoEdges("graph has no edges")
    best = None
    for P in enumerate_ecps(G, max_edges=max_edges):
        m = clique_degree_profile(G, P).maximum
        if best is None or m < best[0]:
            best = (m, P)
    return best


def verify_eigenvector(G: Graph, x, eigenvalue: int) -> bool:
    """Exact check of ``A(G) x = eigenvalue * x`` for a nonzero ``x``."""
    xs = [Fraction(v) for v in x]
    if len(xs) != G.n or not any(xs):
        return False
    for v in G.vertices:
        if sum(xs[u - 1] for u in G.neighbors(v)) != eigenvalue * xs[v - 1]:
            return False
    return True
