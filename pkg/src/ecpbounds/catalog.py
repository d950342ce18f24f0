"""Small named graphs with known ECPs and certifying vectors."""

from .ecp import EdgeCliquePartition, validate_ecp
from .graph import Graph, build_graph


def bowtie_chord() -> Graph:
    """Triangles 123 and 345 sharing vertex 3, plus the chord 24."""
    return build_graph(5, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3), (2, 4)])


def bowtie_chord_ecp() -> EdgeCliquePartition:
    return validate_ecp(bowtie_chord(), [(1, 2, 3), (3, 4, 5), (2, 4)])


def square_two_apexes() -> Graph:
    """4-cycle 1-2-3-4 with vertices 5 and 6 each joined to 3 and 4.

    Least eigenvalue -2, but every ECP has maximum clique degree at least 3.
    """
    return build_graph(6, [(1, 2), (1, 4), (2, 3), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6)])


def bowtie_two_chords() -> Graph:
    """:func:`bowtie_chord` plus the chord 15; spectrum {-2, 1-sqrt5, 0, 0, 1+sqrt5}."""
    return build_graph(5, [(1, 2), (1, 3), (1, 5), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)])


def bowtie_two_chords_ecp() -> EdgeCliquePartition:
    return validate_ecp(bowtie_two_chords(), [(1, 2, 3), (3, 4, 5), (2, 4), (1, 5)])


# attains -2 on bowtie_two_chords with the ECP above
BOWTIE_TWO_CHORDS_VECTOR = (-1, 1, 0, -1, 1)


def bowtie_two_chords_apex() -> Graph:
    """:func:`bowtie_two_chords` plus vertex 6 joined to 1, 3 and 5."""
    return build_graph(6, list(bowtie_two_chords().edges) + [(1, 6), (3, 6), (5, 6)])


def bowtie_two_chords_apex_ecp() -> EdgeCliquePartition:
    """The only ECP of :func:`bowtie_two_chords_apex` with maximum clique degree 2."""
    return validate_ecp(bowtie_two_chords_apex(), [(1, 2), (1, 3, 5, 6), (2, 3, 4), (4, 5)])


BOWTIE_TWO_CHORDS_APEX_VECTOR = (1, -1, 0, 1, -1, 0)

# one-line permutation matching equal entries of the vector above
APEX_DOUBLING_PERMUTATION = (1, 5, 6, 4, 2, 3)
