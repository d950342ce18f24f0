"""Edge clique partitions and clique degrees.

A part is stored as the vertex set of its clique; its edges are *all*
pairs of that set.  Validation rejects anything that does not partition
the edge set this way.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
    DegeneratePart,
    NoEdges,
    NotAClique,
    OverlapEdge,
    ParseError,
    TooLarge,
    UncoveredEdge,
)
from .graph import Edge, Graph, VertexSet, is_clique, vertex_set

DEFAULT_EDGE_BUDGET = 20


@dataclass(frozen=True)
class EdgeCliquePartition:
    parts: tuple[VertexSet, ...]

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def edge_count(self) -> int:
        return sum(len(p) * (len(p) - 1) // 2 for p in self.parts)

    def to_json(self) -> dict:
        return {"parts": [list(p) for p in self.parts]}


@dataclass(frozen=True)
class CliqueDegreeProfile:
    per_vertex: tuple[int, ...]
    maximum: int

    def __getitem__(self, v: int) -> int:
        return self.per_vertex[v - 1]


def part_edges(part: Sequence[int]) -> Iterator[Edge]:
    return combinations(part, 2)


def validate_ecp(G: Graph, parts: Iterable[Iterable[int]]) -> EdgeCliquePartition:
    """Check that ``parts`` is an edge clique partition of ``G``."""
    normalized = tuple(vertex_set(p, G.n) for p in parts)
    covered: set[Edge] = set()
    for idx, part in enumerate(normalized):
        if len(part) < 2:
            raise DegeneratePart(f"part {idx} has fewer than two vertices", part=idx)
        if not is_clique(G, part):
            raise NotAClique(f"part {idx} {list(part)} is not a clique", part=idx)
        for e in part_edges(part):
            if e in covered:
                raise OverlapEdge(f"edge {e} lies in two parts", edge=list(e))
            covered.add(e)
    for e in G.edges:
        if e not in covered:
            raise UncoveredEdge(f"edge {e} is not covered", edge=list(e))
    return EdgeCliquePartition(normalized)


def singleton_ecp(G: Graph) -> EdgeCliquePartition:
    """One two-vertex part per edge."""
    if not G.edges:
        raise NoEdges("graph has no edges")
    return EdgeCliquePartition(tuple(G.edges))


def clique_degree_profile(G: Graph, P: EdgeCliquePartition) -> CliqueDegreeProfile:
    counts = [0] * G.n
    for part in P.parts:
        for v in part:
            counts[v - 1] += 1
    return CliqueDegreeProfile(tuple(counts), max(counts, default=0))


def max_clique_degree(G: Graph, P: EdgeCliquePartition) -> int:
    return clique_degree_profile(G, P).maximum


def _uncovered_cliques_through(G: Graph, u: int, v: int, uncovered: set[Edge]) -> Iterator[VertexSet]:
    """All cliques containing edge uv whose pairs are all uncovered.

    Yielded in lexicographic order of the extension vertices, the bare edge first.
    """

    def ok(a, b):
        return (min(a, b), max(a, b)) in uncovered

    candidates = [w for w in G.neighbors(u) if w != v and ok(u, w) and ok(v, w)]

    def extend(chosen: list[int], start: int):
        yield vertex_set([u, v, *chosen])
        for k in range(start, len(candidates)):
            w = candidates[k]
            if all(ok(w, x) for x in chosen):
                chosen.append(w)
                yield from extend(chosen, k + 1)
                chosen.pop()

    yield from extend([], 0)


def greedy_ecp(G: Graph) -> EdgeCliquePartition:
    """Cover the smallest uncovered edge by a greedily grown clique, repeat."""
    if not G.edges:
        raise NoEdges("graph has no edges")
    uncovered = set(G.edges)
    parts = []
    for e in G.edges:
        if e not in uncovered:
            continue
        u, v = e
        clique = [u, v]
        for w in G.neighbors(u):
            if w == v:
                continue
            if all((min(w, x), max(w, x)) in uncovered for x in clique):
                clique.append(w)
        part = vertex_set(clique)
        uncovered.difference_update(part_edges(part))
        parts.append(part)
    return EdgeCliquePartition(tuple(parts))


def enumerate_ecps(
    G: Graph, limit: int | None = None, max_edges: int = DEFAULT_EDGE_BUDGET
) -> Iterator[EdgeCliquePartition]:
    """Yield every edge clique partition of ``G`` exactly once.

    Branches on the lexicographically smallest uncovered edge, so the parts of
    each yielded partition appear in order of their minimum edge.
    """
    if G.num_edges > max_edges:
        raise TooLarge(f"{G.num_edges} edges exceeds budget {max_edges}", edges=G.num_edges)
    uncovered = set(G.edges)
    order = list(G.edges)
    parts: list[VertexSet] = []
    emitted = 0

    def rec(pos: int):
        nonlocal emitted
        while pos < len(order) and order[pos] not in uncovered:
            pos += 1
        if pos == len(order):
            emitted += 1
            yield EdgeCliquePartition(tuple(parts))
            return
        u, v = order[pos]
        for clique in list(_uncovered_cliques_through(G, u, v, uncovered)):
            es = list(part_edges(clique))
            uncovered.difference_update(es)
            parts.append(clique)
            yield from rec(pos + 1)
            parts.pop()
            uncovered.update(es)
            if limit is not None and emitted >= limit:
                return

    if not G.edges:
        yield EdgeCliquePartition(())
        return
    for P in rec(0):
        yield P
        if limit is not None and emitted >= limit:
            return


def ecp_from_json(G: Graph, data: dict | str) -> EdgeCliquePartition:
    try:
        if isinstance(data, str):
            data = json.loads(data)
        parts = [[int(v) for v in p] for p in data["parts"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"malformed ECP JSON: {exc}") from exc
    return validate_ecp(G, parts)
