import math

import numpy as np
import pytest
from hypothesis import given, settings

from ecpbounds.catalog import bowtie_chord, bowtie_two_chords, square_two_apexes
from ecpbounds.charpoly import charpoly, exact_eigenvalues, squarefree_factors
from ecpbounds.errors import DimMismatch, NoConvergence, NotSymmetric
from ecpbounds.graph import adjacency_matrix, build_graph, complete_graph, max_degree, petersen_graph
from ecpbounds.queens import index_of, queens_graph
from ecpbounds.spectra import (
    Spectrum,
    eigenvalues_symmetric,
    graph_spectrum,
    interlacing_check,
    jacobi_eigenvalues,
    least_eigenvalue,
    multiset_shift_equal,
)

from oracles import random_graph
from test_graph import graphs

SQRT5 = math.sqrt(5)


def test_k2():
    assert graph_spectrum(complete_graph(2)).values == pytest.approx((-1, 1), abs=1e-12)


def test_bowtie_two_chords_spectrum():
    s = graph_spectrum(bowtie_two_chords())
    assert s.values == pytest.approx(sorted([-2, 1 - SQRT5, 0, 0, 1 + SQRT5]), abs=1e-9)
    assert s.values[1] == pytest.approx(-1.23607, abs=1e-5)


def test_q4_least_simple():
    s = graph_spectrum(queens_graph(4))
    assert s.least == pytest.approx(-4, abs=1e-8)
    assert s.clusters()[0] == (pytest.approx(-4, abs=1e-8), 1)


def test_least_eigenvalues():
    assert least_eigenvalue(petersen_graph()) == pytest.approx(-2, abs=1e-8)
    assert least_eigenvalue(square_two_apexes()) == pytest.approx(-2, abs=1e-8)
    lam = least_eigenvalue(bowtie_chord())
    assert lam > -2
    # smallest root of the exact characteristic polynomial
    assert lam == pytest.approx(exact_eigenvalues(adjacency_matrix(bowtie_chord()))[0], abs=1e-10)


def test_errors():
    with pytest.raises(NotSymmetric):
        eigenvalues_symmetric([[0, 1], [0, 0]])
    with pytest.raises(DimMismatch):
        eigenvalues_symmetric([[1, 2, 3]])
    with pytest.raises(NoConvergence):
        jacobi_eigenvalues([[1.0, 2.0, 0.5], [2.0, -1.0, 0.3], [0.5, 0.3, 0.0]], max_sweeps=1)


def test_matches_numpy_on_random_symmetric(rng):
    for _ in range(10):
        n = rng.randint(1, 12)
        a = np.array([[rng.uniform(-3, 3) for _ in range(n)] for _ in range(n)])
        a = a + a.T
        assert eigenvalues_symmetric(a).values == pytest.approx(np.linalg.eigvalsh(a), abs=1e-9)


def test_interlacing_examples():
    assert interlacing_check(square_two_apexes(), [1, 2, 3, 4])
    assert interlacing_check(bowtie_chord(), [3])
    Q8 = queens_graph(8)
    assert interlacing_check(Q8, [index_of(i, j, 8) for i in range(1, 5) for j in range(1, 5)])


def test_shift_equal_examples():
    assert multiset_shift_equal(Spectrum((0.0,)), Spectrum((-1.0, 1.0)))
    assert not multiset_shift_equal(Spectrum((0.0,)), Spectrum((-1.0, 1.5)))
    with pytest.raises(DimMismatch):
        multiset_shift_equal(Spectrum((0.0,)), Spectrum((0.0,)))


def test_clusters_and_json():
    s = Spectrum((-2.0, -1.0, -1.0 + 1e-9, 3.0))
    assert [k for _, k in s.clusters()] == [1, 2, 1]
    js = s.to_json()
    assert js["clusters"][1]["multiplicity"] == 2 and len(js["values"]) == 4


def test_charpoly_known():
    # x^2 - 1 for K_2; x^3 - 3x - 2 = (x+1)^2 (x-2) for K_3
    assert charpoly(adjacency_matrix(complete_graph(2))) == [1, 0, -1]
    assert charpoly(adjacency_matrix(complete_graph(3))) == [1, 0, -3, -2]
    factors = squarefree_factors([1, 0, -3, -2])
    assert [(tuple(f), k) for f, k in factors] == [((1, -2), 1), ((1, 1), 2)]
    assert exact_eigenvalues(adjacency_matrix(complete_graph(3))) == pytest.approx([-1, -1, 2], abs=1e-12)


@given(graphs())
def test_trace_identities(G):
    s = graph_spectrum(G)
    assert len(s) == G.n and list(s.values) == sorted(s.values)
    assert abs(sum(s.values)) < G.n * 1e-10
    assert abs(sum(v * v for v in s.values) - 2 * G.num_edges) < G.n * 1e-8
    assert s.least >= -max_degree(G) - 1e-8


@settings(max_examples=40)
@given(graphs(max_n=6))
def test_jacobi_matches_exact_roots(G):
    A = adjacency_matrix(G)
    assert graph_spectrum(G).values == pytest.approx(exact_eigenvalues(A), abs=1e-8)


@given(graphs(max_n=7))
def test_interlacing_random_subsets(G):
    S = [v for v in G.vertices if v % 2 == 1]
    assert interlacing_check(G, S)
