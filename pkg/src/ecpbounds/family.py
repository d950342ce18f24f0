"""Graph doubling: two copies of ``G`` joined by a permutation matching.

Copy vertices are labelled ``v + n``.  Each doubling raises the maximum clique
degree of the propagated ECP by one, and a certifying vector lifts to the
doubled graph when the permutation only matches equal entries.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .ecp import EdgeCliquePartition
from .errors import IncompatiblePermutation, NotAPermutation, ParseError
from .graph import Graph, build_graph
from .spectra import DEFAULT_TOL, Spectrum, graph_spectrum, multiset_shift_equal

Permutation = tuple[int, ...]


def permutation(image: Sequence[int], n: int | None = None) -> Permutation:
    """Validate a permutation in one-line notation (``image[v-1]`` is the target of ``v``)."""
    p = tuple(int(x) for x in image)
    if n is not None and len(p) != n:
        raise NotAPermutation(f"permutation has {len(p)} entries, graph has {n} vertices")
    if sorted(p) != list(range(1, len(p) + 1)):
        raise NotAPermutation(f"{list(p)} is not a bijection on 1..{len(p)}")
    return p


def parse_permutation(text: str) -> Permutation:
    """``"1,5,6,4,2,3"``, ``"[156423]"`` or ``"156423"`` (digits only below 10)."""
    s = text.strip().strip("[]()")
    try:
        if "," in s or " " in s:
            parts = [x for x in s.replace(",", " ").split() if x]
            return permutation(int(x) for x in parts)
        return permutation(int(ch) for ch in s)
    except ValueError as exc:
        raise ParseError(f"cannot parse permutation {text!r}") from exc


def identity_permutation(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def double_graph(G: Graph, pi: Sequence[int]) -> Graph:
    pi = permutation(pi, G.n)
    n = G.n
    edges = list(G.edges)
    edges += [(u + n, v + n) for u, v in G.edges]
    edges += [(v, n + pi[v - 1]) for v in G.vertices]
    return build_graph(2 * n, edges)


def propagate_ecp(P: EdgeCliquePartition, n: int, pi: Sequence[int]) -> EdgeCliquePartition:
    pi = permutation(pi, n)
    copy = tuple(tuple(v + n for v in part) for part in P.parts)
    matching = tuple((v, n + pi[v - 1]) for v in range(1, n + 1))
    return EdgeCliquePartition(P.parts + copy + matching)


def lift_vector(X: Sequence, pi: Sequence[int]) -> tuple[Fraction, ...]:
    """``Y = (X, -X)``; requires ``X[pi(v)] == X[v]`` so matched pairs cancel."""
    xs = tuple(Fraction(x) for x in X)
    pi = permutation(pi, len(xs))
    if not any(xs):
        raise IncompatiblePermutation("cannot lift the zero vector")
    for v, target in enumerate(pi, start=1):
        if xs[target - 1] != xs[v - 1]:
            raise IncompatiblePermutation(
                f"pi({v}) = {target} joins entries {xs[v - 1]} and {-xs[target - 1]}", vertex=v
            )
    return xs + tuple(-x for x in xs)


def identity_doubling_spectrum(G: Graph, tol: float = 1e-8) -> tuple[Spectrum, Spectrum, bool]:
    s1 = graph_spectrum(G, DEFAULT_TOL)
    s2 = graph_spectrum(double_graph(G, identity_permutation(G.n)), DEFAULT_TOL)
    return s1, s2, multiset_shift_equal(s1, s2, tol)
