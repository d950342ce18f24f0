"""Least-eigenvalue bounds from edge clique partitions, with an exact
certificate for the n-Queens graph."""

from .bounds import (
    AttainmentCertificate,
    Sandwich,
    attainment,
    content_spectral_bound,
    lower_bound,
    min_m_over_ecps,
    sandwich,
    upper_bound_via_subgraph,
)
from .content import ContentResult, content
from .ecp import (
    CliqueDegreeProfile,
    EdgeCliquePartition,
    clique_degree_profile,
    enumerate_ecps,
    greedy_ecp,
    singleton_ecp,
    validate_ecp,
)
from .graph import Graph, adjacency_matrix, build_graph, induced_subgraph, is_clique, max_degree
from .queens import QueensCertificate, canonical_ecp, certify, queens_graph
from .spectra import Spectrum, eigenvalues_symmetric, graph_spectrum, least_eigenvalue

__version__ = "0.1.0"
