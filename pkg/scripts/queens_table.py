"""Certify lambda_min(Q(n)) = -4 with multiplicity (n-3)^2 over a range of n."""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from ecpbounds.queens import certify


@dataclass(frozen=True)
class QueensConfig:
    n_min: int = 4
    n_max: int = 12
    size_cap: int = 12


def run(cfg: QueensConfig) -> list[dict]:
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        t0 = time.perf_counter()
        c = certify(n, cfg.size_cap)
        rows.append(c.to_json() | {"seconds": round(time.perf_counter() - t0, 3)})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=QueensConfig.n_min)
    ap.add_argument("--n-max", type=int, default=QueensConfig.n_max)
    ap.add_argument("--cap", type=int, default=QueensConfig.size_cap)
    ap.add_argument("--json", action="store_true")
    a = ap.parse_args()
    cfg = QueensConfig(a.n_min, a.n_max, max(a.cap, a.n_max))
    rows = run(cfg)
    if a.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    print(f"{'n':>3} {'vertices':>8} {'lambda_min':>10} {'mult':>5} {'rank':>5} {'time/s':>7}")
    for r in rows:
        print(f"{r['n']:>3} {r['n'] ** 2:>8} {r['least_eigenvalue']:>10} {r['multiplicity']:>5} "
              f"{r['constraint_rank']:>5} {r['seconds']:>7}")


if __name__ == "__main__":
    main()
