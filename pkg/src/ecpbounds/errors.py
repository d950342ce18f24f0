"""Exception hierarchy.

Every error carries a short machine-readable ``code`` and an ``exit_code``
used by the command line front end.
"""


class ECPError(Exception):
    code = "error"
    exit_code = 3

    def __init__(self, message="", **details):
        super().__init__(message or self.code)
        self.details = details

    def to_json(self):
        return {"code": self.code, "message": str(self), **self.details}


class InvalidVertex(ECPError):
    code = "invalid_vertex"


class SelfLoop(ECPError):
    code = "self_loop"


class EmptySelection(ECPError):
    code = "empty_selection"


class NoEdges(ECPError):
    code = "no_edges"


class NotAClique(ECPError):
    code = "not_a_clique"


class OverlapEdge(ECPError):
    code = "overlap_edge"


class UncoveredEdge(ECPError):
    code = "uncovered_edge"


class DegeneratePart(ECPError):
    code = "degenerate_part"


class TooLarge(ECPError):
    code = "too_large"
    exit_code = 4


class DimMismatch(ECPError):
    code = "dim_mismatch"


class NotSymmetric(ECPError):
    code = "not_symmetric"


class NoConvergence(ECPError):
    code = "no_convergence"
    exit_code = 1


class NotAttained(ECPError):
    code = "not_attained"


class InvalidSize(ECPError):
    code = "invalid_size"
    exit_code = 4


class InvalidWindow(ECPError):
    code = "invalid_window"
    exit_code = 4


class NotAPermutation(ECPError):
    code = "not_a_permutation"


class IncompatiblePermutation(ECPError):
    code = "incompatible_permutation"


class CertificationFailed(ECPError):
    code = "certification_failed"
    exit_code = 1


class ParseError(ECPError):
    code = "parse_error"
    exit_code = 2
