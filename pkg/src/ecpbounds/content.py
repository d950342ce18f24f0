"""Exact content (minimum ECP size) by branch and bound, for small graphs."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .ecp import (
    DEFAULT_EDGE_BUDGET,
    EdgeCliquePartition,
    _uncovered_cliques_through,
    greedy_ecp,
    part_edges,
)
from .errors import TooLarge
from .graph import Graph
from .spectra import least_eigenvalue


@dataclass(frozen=True)
class ContentResult:
    value: int
    witness: EdgeCliquePartition
    nodes_explored: int

    def to_json(self) -> dict:
        return {"value": self.value, "witness": self.witness.to_json()["parts"], "nodes_explored": self.nodes_explored}


def clique_number(G: Graph) -> int:
    best = 1 if G.n else 0

    def grow(size: int, cands: list[int]):
        nonlocal best
        best = max(best, size)
        for k, w in enumerate(cands):
            if size + len(cands) - k <= best:
                return
            grow(size + 1, [u for u in cands[k + 1 :] if G.has_edge(w, u)])

    grow(0, list(G.vertices))
    return best


def has_triangle(G: Graph) -> bool:
    return any(set(G.neighbors(u)) & set(G.neighbors(v)) for u, v in G.edges)


def content(G: Graph, max_edges: int = DEFAULT_EDGE_BUDGET) -> ContentResult:
    if G.num_edges > max_edges:
        raise TooLarge(f"{G.num_edges} edges exceeds budget {max_edges}", edges=G.num_edges)
    if not G.edges:
        return ContentResult(0, EdgeCliquePartition(()), 0)
    if not has_triangle(G):
        return ContentResult(G.num_edges, EdgeCliquePartition(G.edges), 0)

    omega = clique_number(G)
    capacity = omega * (omega - 1) // 2
    floor_bound = max(math.ceil(-least_eigenvalue(G) - 1e-8), math.ceil(G.num_edges / capacity))

    incumbent = greedy_ecp(G)
    best = len(incumbent)
    best_parts = incumbent.parts
    nodes = 0
    order = list(G.edges)
    uncovered = set(G.edges)
    parts: list[tuple[int, ...]] = []

    def rec(pos: int) -> bool:
        """Returns True once the global lower bound is met."""
        nonlocal best, best_parts, nodes
        nodes += 1
        if not uncovered:
            if len(parts) < best:
                best, best_parts = len(parts), tuple(parts)
            return best <= floor_bound
        if len(parts) + math.ceil(len(uncovered) / capacity) >= best:
            return False
        while order[pos] not in uncovered:
            pos += 1
        u, v = order[pos]
        cliques = sorted(_uncovered_cliques_through(G, u, v, uncovered), key=lambda c: (-len(c), c))
        for clique in cliques:
            es = list(part_edges(clique))
            uncovered.difference_update(es)
            parts.append(clique)
            done = rec(pos + 1)
            parts.pop()
            uncovered.update(es)
            if done:
                return True
        return False

    if best > floor_bound:
        rec(0)
    witness = EdgeCliquePartition(tuple(sorted(best_parts, key=lambda p: (p[0], p[1]))))
    return ContentResult(best, witness, nodes)


def content_dominates_spectrum(G: Graph, tol: float = 1e-8, max_edges: int = DEFAULT_EDGE_BUDGET) -> bool:
    """``-lambda_min(G) <= C(G)``."""
    return -least_eigenvalue(G) <= content(G, max_edges).value + tol
