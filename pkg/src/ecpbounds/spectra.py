"""Floating point spectra via the cyclic Jacobi method."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimMismatch, EmptySelection, NoConvergence, NotSymmetric
from .graph import Graph, adjacency_matrix, induced_subgraph, vertex_set

DEFAULT_TOL = 1e-12
GROUPING_TOL = 1e-6
MAX_SWEEPS = 100


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    grouping_tol: float = GROUPING_TOL

    def __len__(self):
        return len(self.values)

    @property
    def least(self) -> float:
        return self.values[0]

    def clusters(self) -> list[tuple[float, int]]:
        """Group sorted values whose successive gaps are below ``grouping_tol``."""
        out: list[list[float]] = []
        for v in self.values:
            if out and v - out[-1][-1] < self.grouping_tol:
                out[-1].append(v)
            else:
                out.append([v])
        return [(float(np.mean(c)), len(c)) for c in out]

    def multiplicity(self, value: float) -> int:
        return sum(k for v, k in self.clusters() if abs(v - value) < self.grouping_tol)

    def to_json(self) -> dict:
        return {
            "values": [round(v, 12) + 0.0 for v in self.values],
            "clusters": [{"value": round(v, 12) + 0.0, "multiplicity": k} for v, k in self.clusters()],
        }


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def jacobi_eigenvalues(A, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Unsorted eigenvalues of a real symmetric matrix by cyclic Jacobi sweeps.

    Stops once the off-diagonal Frobenius norm falls below ``tol``.
    """
    a = np.array(A, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise DimMismatch(f"expected a non-empty square matrix, got shape {a.shape}")
    if np.max(np.abs(a - a.T)) > tol:
        raise NotSymmetric("matrix is not symmetric")
    a = (a + a.T) / 2
    n = a.shape[0]
    for sweep in range(max_sweeps):
        if _off_norm(a) < tol:
            return np.diag(a).copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app, aqq = a[p, p], a[q, q]
                # negligible against both diagonal entries: drop it
                if sweep > 3 and abs(app) + 100 * abs(apq) == abs(app) and abs(aqq) + 100 * abs(apq) == abs(aqq):
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (aqq - app) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
    if _off_norm(a) < tol:
        return np.diag(a).copy()
    raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps", off_norm=_off_norm(a))


def eigenvalues_symmetric(A, tol: float = DEFAULT_TOL, grouping_tol: float = GROUPING_TOL) -> Spectrum:
    vals = np.sort(jacobi_eigenvalues(A, tol))
    return Spectrum(tuple(float(v) for v in vals), grouping_tol)


def graph_spectrum(G: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    return eigenvalues_symmetric(adjacency_matrix(G), tol)


def least_eigenvalue(G: Graph, tol: float = DEFAULT_TOL) -> float:
    return graph_spectrum(G, tol).least


def interlacing_check(G: Graph, S, tol: float = 1e-8) -> bool:
    """Cauchy interlacing between ``G`` and its subgraph induced by ``S``."""
    members = vertex_set(S, G.n)
    if not members:
        raise EmptySelection("interlacing needs a nonempty vertex subset")
    H, _ = induced_subgraph(G, members)
    lg = graph_spectrum(G).values
    lh = graph_spectrum(H).values
    n, m = len(lg), len(lh)
    return all(lg[i] - tol <= lh[i] <= lg[i + n - m] + tol for i in range(m))


def multiset_shift_equal(s1: Spectrum, s2: Spectrum, tol: float = 1e-8) -> bool:
    """Is ``s2`` the multiset union of ``s1 + 1`` and ``s1 - 1``?"""
    if len(s2) != 2 * len(s1):
        raise DimMismatch(f"expected {2 * len(s1)} values, got {len(s2)}")
    shifted = sorted([v + 1 for v in s1.values] + [v - 1 for v in s1.values])
    return all(abs(a - b) <= tol for a, b in zip(shifted, sorted(s2.values)))
