import random

import pytest
from hypothesis import given, settings

from ecpbounds.catalog import bowtie_chord, bowtie_chord_ecp, square_two_apexes
from ecpbounds.ecp import (
    clique_degree_profile,
    enumerate_ecps,
    greedy_ecp,
    singleton_ecp,
    validate_ecp,
)
from ecpbounds.errors import (
    DegeneratePart,
    NoEdges,
    NotAClique,
    OverlapEdge,
    TooLarge,
    UncoveredEdge,
)
from ecpbounds.graph import build_graph, complete_graph, cycle_graph, max_degree, path_graph
from ecpbounds.queens import canonical_ecp, index_of, queens_graph

from oracles import naive_ecps, random_graph
from test_graph import graphs


def test_validate_example():
    P = validate_ecp(bowtie_chord(), [{1, 2, 3}, {3, 4, 5}, {2, 4}])
    assert len(P) == 3


def test_validate_trivial_complete():
    P = validate_ecp(complete_graph(5), [range(1, 6)])
    assert P.parts == ((1, 2, 3, 4, 5),)


def test_validate_errors():
    G = bowtie_chord()
    with pytest.raises(UncoveredEdge) as exc:
        validate_ecp(G, [(1, 2, 3), (3, 4, 5)])
    assert exc.value.details["edge"] == [2, 4]
    with pytest.raises(NotAClique) as exc:
        validate_ecp(G, [(1, 2, 3), (2, 4, 5)])
    assert exc.value.details["part"] == 1
    with pytest.raises(OverlapEdge):
        validate_ecp(G, [(1, 2, 3), (3, 4, 5), (2, 4), (1, 2)])
    with pytest.raises(DegeneratePart):
        validate_ecp(G, [(1, 2, 3), (3, 4, 5), (2, 4), (5,)])


def test_part_must_carry_all_its_pairs():
    # {1,2,3} is a clique of K_3 but the pair 13 is claimed separately
    with pytest.raises(OverlapEdge):
        validate_ecp(complete_graph(3), [(1, 2, 3), (1, 3)])


def test_singleton_tree_degree():
    T = build_graph(6, [(1, 2), (1, 3), (1, 4), (4, 5), (4, 6)])
    P = singleton_ecp(T)
    prof = clique_degree_profile(T, P)
    assert prof.maximum == max_degree(T) == 3
    assert prof.per_vertex == tuple(T.degree(v) for v in T.vertices)


def test_singleton_small_cases():
    assert clique_degree_profile(complete_graph(2), singleton_ecp(complete_graph(2))).maximum == 1
    P = singleton_ecp(bowtie_chord())
    assert len(P) == 7 and clique_degree_profile(bowtie_chord(), P).maximum == 4
    with pytest.raises(NoEdges):
        singleton_ecp(build_graph(2, []))


def test_profile_example():
    prof = clique_degree_profile(bowtie_chord(), bowtie_chord_ecp())
    assert prof.per_vertex == (1, 2, 2, 2, 1)
    assert prof.maximum == 2


@pytest.mark.parametrize("n", [4, 5, 7])
def test_profile_queens(n):
    prof = clique_degree_profile(queens_graph(n), canonical_ecp(n))
    corners = {index_of(i, j, n) for i in (1, n) for j in (1, n)}
    assert all(prof[v] == (3 if v in corners else 4) for v in range(1, n * n + 1))
    assert prof.maximum == 4


def test_profile_complete_trivial():
    G = complete_graph(6)
    assert clique_degree_profile(G, validate_ecp(G, [range(1, 7)])).per_vertex == (1,) * 6


def test_profile_isolated_vertex_zero():
    G = build_graph(4, [(1, 2), (2, 3)])
    assert clique_degree_profile(G, singleton_ecp(G)).per_vertex == (1, 2, 1, 0)


def test_greedy_examples():
    assert greedy_ecp(complete_graph(4)).parts == ((1, 2, 3, 4),)
    C5 = cycle_graph(5)
    P = greedy_ecp(C5)
    assert len(P) == 5 and clique_degree_profile(C5, P).maximum == 2
    P = greedy_ecp(bowtie_chord())
    validate_ecp(bowtie_chord(), P.parts)
    assert clique_degree_profile(bowtie_chord(), P).maximum == 2
    with pytest.raises(NoEdges):
        greedy_ecp(build_graph(1, []))


def test_enumerate_triangle():
    found = {frozenset(map(frozenset, P.parts)) for P in enumerate_ecps(complete_graph(3))}
    assert found == {
        frozenset({frozenset({1, 2, 3})}),
        frozenset({frozenset({1, 2}), frozenset({1, 3}), frozenset({2, 3})}),
    }


def test_enumerate_single_edge():
    assert len(list(enumerate_ecps(complete_graph(2)))) == 1


def test_enumerate_square_two_apexes_never_two():
    G = square_two_apexes()
    ms = {clique_degree_profile(G, P).maximum for P in enumerate_ecps(G)}
    assert min(ms) == 3


def test_enumerate_budget_and_limit():
    with pytest.raises(TooLarge):
        list(enumerate_ecps(complete_graph(7)))
    assert len(list(enumerate_ecps(complete_graph(5), limit=3))) == 3


def test_enumerate_parts_in_min_edge_order():
    for P in enumerate_ecps(complete_graph(4)):
        keys = [(p[0], p[1]) for p in P.parts]
        assert keys == sorted(keys)


def test_enumerate_matches_naive_oracle(rng):
    checked = 0
    while checked < 60:
        G = random_graph(rng, 6)
        if G.num_edges > 8:
            continue
        ours = [frozenset(map(frozenset, P.parts)) for P in enumerate_ecps(G)]
        assert len(ours) == len(set(ours))
        assert set(ours) == (naive_ecps(G) if G.edges else {frozenset()})
        checked += 1


def test_path_has_unique_ecp():
    assert len(list(enumerate_ecps(path_graph(6)))) == 1


@given(graphs())
def test_ecp_counting_identities(G):
    if not G.edges:
        return
    for P in (singleton_ecp(G), greedy_ecp(G)):
        validate_ecp(G, P.parts)
        prof = clique_degree_profile(G, P)
        assert sum(len(p) * (len(p) - 1) // 2 for p in P.parts) == G.num_edges
        assert sum(prof.per_vertex) == sum(len(p) for p in P.parts)
        assert prof.maximum <= min(len(P), max_degree(G))
        assert all(prof[v] <= G.degree(v) for v in G.vertices)


@settings(max_examples=25)
@given(graphs(max_n=6))
def test_enumerated_ecps_valid(G):
    if G.num_edges > 10:
        return
    for P in enumerate_ecps(G):
        validate_ecp(G, P.parts)
