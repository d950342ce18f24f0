"""Compare content with its spectral floor over all small graphs.

Enumerates graphs without isolated vertices up to a given edge count (up to
isomorphism, via networkx) and tabulates the gap C(G) - ceil(-lambda_min).
"""

import argparse
import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from ecpbounds.content import content
from ecpbounds.graph import build_graph
from ecpbounds.spectra import least_eigenvalue


@dataclass(frozen=True)
class SurveyConfig:
    max_edges: int = 6


def small_graphs(max_edges: int):
    level = [nx.Graph([(0, 1)])]
    yield from level
    for _ in range(max_edges - 1):
        reps: list[nx.Graph] = []
        for H in level:
            k = H.number_of_nodes()
            cands = [e for e in combinations(H.nodes, 2) if not H.has_edge(*e)]
            cands += [(u, k) for u in H.nodes] + [(k, k + 1)]
            for e in cands:
                H2 = H.copy()
                H2.add_edge(*e)
                if not any(nx.is_isomorphic(H2, R) for R in reps):
                    reps.append(H2)
        level = reps
        yield from level


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-edges", type=int, default=SurveyConfig.max_edges)
    cfg = SurveyConfig(ap.parse_args().max_edges)
    gaps: dict[int, Counter] = {}
    for H in small_graphs(cfg.max_edges):
        label = {v: i for i, v in enumerate(sorted(H.nodes), start=1)}
        G = build_graph(len(label), [(label[u], label[v]) for u, v in H.edges])
        floor = math.ceil(-least_eigenvalue(G) - 1e-8)
        gaps.setdefault(G.num_edges, Counter())[content(G).value - floor] += 1
    width = max(g for c in gaps.values() for g in c) + 1
    print("edges  graphs  " + " ".join(f"gap={g:<2}" for g in range(width)))
    for e in sorted(gaps):
        c = gaps[e]
        print(f"{e:>5}  {sum(c.values()):>6}  " + " ".join(f"{c[g]:>6}" for g in range(width)))


if __name__ == "__main__":
    main()
