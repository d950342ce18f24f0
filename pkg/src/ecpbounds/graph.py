"""Simple undirected graphs on vertices 1..n."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import EmptySelection, InvalidVertex, ParseError, SelfLoop

Edge = tuple[int, int]
VertexSet = tuple[int, ...]


def vertex_set(members: Iterable[int], n: int | None = None) -> VertexSet:
    """Sorted, duplicate-free tuple of labels, range-checked against ``n``."""
    s = tuple(sorted(set(int(v) for v in members)))
    if n is not None:
        for v in s:
            if not 1 <= v <= n:
                raise InvalidVertex(f"vertex {v} not in 1..{n}", vertex=v)
    return s


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    _edge_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_edge_set", frozenset(self.edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """``adjacency[v-1]`` is the sorted neighbour tuple of ``v``."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u - 1].append(v)
            nbrs[v - 1].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v - 1]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v - 1])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_set

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in self.vertices]
        lines += [f"  {u} -- {v};" for u, v in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``1..n``; duplicate edges are dropped, order is lexicographic."""
    if n < 1:
        raise InvalidVertex(f"vertex count must be positive, got {n}", vertex=n)
    normalized = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        for w in (u, v):
            if not 1 <= w <= n:
                raise InvalidVertex(f"vertex {w} not in 1..{n}", vertex=w)
        if u == v:
            raise SelfLoop(f"self-loop at {u}", vertex=u)
        normalized.add((min(u, v), max(u, v)))
    return Graph(n, tuple(sorted(normalized)))


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``S``, relabelled ``1..|S|`` in sorted order of ``S``.

    Returns the subgraph and the old -> new label map.
    """
    members = vertex_set(S, G.n)
    if not members:
        raise EmptySelection("induced subgraph needs at least one vertex")
    relabel = {v: k for k, v in enumerate(members, start=1)}
    edges = [(relabel[u], relabel[v]) for u, v in G.edges if u in relabel and v in relabel]
    return build_graph(len(members), edges), relabel


def is_clique(G: Graph, S: Iterable[int]) -> bool:
    members = vertex_set(S, G.n)
    return all(G.has_edge(u, v) for u, v in combinations(members, 2))


def max_degree(G: Graph) -> int:
    return max((len(a) for a in G.adjacency), default=0)


def adjacency_matrix(G: Graph) -> list[list[int]]:
    A = [[0] * G.n for _ in range(G.n)]
    for u, v in G.edges:
        A[u - 1][v - 1] = A[v - 1][u - 1] = 1
    return A


# -- named constructions -----------------------------------------------------

def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(1, n + 1), 2))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(v, v % n + 1) for v in range(1, n + 1)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(v, v + 1) for v in range(1, n)])


def petersen_graph() -> Graph:
    outer = [(v, v % 5 + 1) for v in range(1, 6)]
    spokes = [(v, v + 5) for v in range(1, 6)]
    inner = [(i + 6, (i + 2) % 5 + 6) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


# -- serialization -----------------------------------------------------------

def graph_from_json(data: dict | str) -> Graph:
    try:
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data["n"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"malformed graph JSON: {exc}") from exc
    return build_graph(n, edges)


_DOT_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$")
_DOT_NODE = re.compile(r"^\s*(\d+)\s*;?\s*$")


def graph_from_dot(text: str) -> Graph:
    """Parse the restricted DOT dialect written by :meth:`Graph.to_dot`."""
    body = text.strip()
    if not body.startswith("graph") or not body.endswith("}"):
        raise ParseError("expected 'graph NAME { ... }'")
    inner = body[body.index("{") + 1 : -1]
    nodes, edges = set(), []
    for line in inner.splitlines():
        if not line.strip():
            continue
        m = _DOT_EDGE.match(line)
        if m:
            u, v = int(m.group(1)), int(m.group(2))
            edges.append((u, v))
            nodes.update((u, v))
            continue
        m = _DOT_NODE.match(line)
        if m:
            nodes.add(int(m.group(1)))
            continue
        raise ParseError(f"unrecognised DOT line: {line.strip()!r}")
    if not nodes:
        raise ParseError("DOT graph has no vertices")
    return build_graph(max(nodes), edges)
