"""Command line entry point.

Exit codes: 0 pass, 1 verification failure, 2 parse error, 3 domain
validation error, 4 argument out of range.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import bounds, family, queens, spectra
from .content import content as compute_content
from .ecp import clique_degree_profile, ecp_from_json, validate_ecp
from .errors import ECPError, InvalidSize, ParseError
from .graph import Graph, graph_from_dot, graph_from_json
from .linalg import vector_to_json

EXIT_PASS, EXIT_FAIL, EXIT_PARSE, EXIT_DOMAIN, EXIT_RANGE = 0, 1, 2, 3, 4


@dataclass
class RunReport:
    command: str
    inputs: dict
    results: dict
    passed: bool
    human: list[str] = field(default_factory=list)
    wall_time: float = 0.0
    exit_code: int | None = None

    @property
    def inputs_digest(self) -> str:
        blob = json.dumps(self.inputs, sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()

    def envelope(self, timing: bool = False) -> dict:
        out = {
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "passed": self.passed,
            "results": self.results,
        }
        if timing:
            out["wall_time_s"] = round(self.wall_time, 6)
        return out


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def load_graph(path: str) -> tuple[Graph, str]:
    text = _read(path)
    if path.endswith(".dot") or text.lstrip().startswith("graph"):
        return graph_from_dot(text), text
    return graph_from_json(_loads(text)), text


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def load_ecp(G: Graph, path: str):
    text = _read(path)
    return ecp_from_json(G, _loads(text)), text


def parse_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise ParseError(f"bad range {text!r}") from exc


def parse_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError as exc:
        raise ParseError(f"bad integer list {text!r}") from exc


# -- commands ----------------------------------------------------------------

def cmd_bound(args) -> RunReport:
    G, gtext = load_graph(args.graph)
    P, ptext = load_ecp(G, args.ecp)
    lb = bounds.lower_bound(G, P)
    cert = bounds.attainment(G, P)
    lam = spectra.least_eigenvalue(G)
    ok = lam >= lb - 1e-8 and (not cert.attained or abs(lam - lb) < 1e-8)
    exact = all(bounds.verify_eigenvector(G, x, lb) for x in cert.kernel)
    results = {
        "lower_bound": lb,
        "certificate": cert.to_json(),
        "jacobi_least_eigenvalue": round(lam, 12) + 0.0,
        "kernel_verified": exact,
    }
    human = [
        f"lower bound      : {lb}",
        f"attained         : {cert.attained} (kernel dimension {len(cert.kernel)})",
        f"jacobi lambda_min: {lam:.12f}",
    ]
    return RunReport("bound", {"graph": gtext, "ecp": ptext}, results, ok and exact, human)


def cmd_queens(args) -> RunReport:
    ns = parse_range(args.n)
    for n in ns:
        if not 4 <= n <= args.cap:
            raise InvalidSize(f"n={n} outside 4..{args.cap}")
    rows, human = [], [f"{'n':>3} {'lambda_min':>10} {'mult':>5} {'(n-3)^2':>8} {'rank':>5} {'6n-9':>5}  status"]
    passed = True
    for n in ns:
        try:
            c = queens.certify(n, args.cap)
            row = c.to_json() | {"verified": True}
        except ECPError as exc:
            if exc.exit_code != EXIT_FAIL:
                raise
            passed = False
            row = {"n": n, "verified": False, "error": exc.to_json()}
        rows.append(row)
        if row["verified"]:
            human.append(
                f"{n:>3} {row['least_eigenvalue']:>10} {row['multiplicity']:>5} {(n - 3) ** 2:>8} "
                f"{row['constraint_rank']:>5} {6 * n - 9:>5}  ok"
            )
        else:
            human.append(f"{n:>3} {'':>10} {'':>5} {(n - 3) ** 2:>8} {'':>5} {6 * n - 9:>5}  FAILED")
    results = {"certificates": rows}
    if args.show_vector:
        a, b = parse_ints(args.show_vector)
        X = queens.basis_vector(ns[0], a, b)
        results["vector"] = {"n": ns[0], "window": [a, b], "board": X.to_json()}
        human += ["", f"basis vector n={ns[0]} window ({a},{b}):", X.render()]
    return RunReport("queens", {"n": ns, "cap": args.cap, "show_vector": args.show_vector}, results, passed, human)


def cmd_spectrum(args) -> RunReport:
    G, gtext = load_graph(args.graph)
    s = spectra.graph_spectrum(G)
    tr = sum(s.values)
    tr2 = sum(v * v for v in s.values)
    tol = G.n * 1e-8
    ok = abs(tr) < tol and abs(tr2 - 2 * G.num_edges) < tol
    human = [f"{v:>10.6f} x{k}" for v, k in s.clusters()]
    return RunReport("spectrum", {"graph": gtext}, s.to_json(), ok, human)


def cmd_content(args) -> RunReport:
    G, gtext = load_graph(args.graph)
    res = compute_content(G, args.limit_edges)
    spectral = bounds.content_spectral_bound(G) if G.edges else 0
    results = res.to_json() | {"spectral_lower_bound": spectral}
    human = [f"content: {res.value}", f"witness: {results['witness']}", f"spectral bound: {spectral}"]
    return RunReport(
        "content", {"graph": gtext, "limit_edges": args.limit_edges}, results, res.value >= spectral, human
    )


def cmd_family(args) -> RunReport:
    G, gtext = load_graph(args.graph)
    pi = family.parse_permutation(args.perm) if args.perm else family.identity_permutation(G.n)
    pi = family.permutation(pi, G.n)
    D = family.double_graph(G, pi)
    results: dict = {"permutation": list(pi), "graph": D.to_json()}
    s1, s2 = spectra.graph_spectrum(G), spectra.graph_spectrum(D)
    results["spectrum"] = s2.to_json()
    results["shift_equal"] = spectra.multiset_shift_equal(s1, s2)
    passed = True
    human = [f"doubled graph: {D.n} vertices, {D.num_edges} edges", f"sigma(D) = sigma(G) +- 1: {results['shift_equal']}"]
    inputs = {"graph": gtext, "perm": list(pi)}
    if args.ecp:
        P, ptext = load_ecp(G, args.ecp)
        inputs["ecp"] = ptext
        P2 = family.propagate_ecp(P, G.n, pi)
        P2 = validate_ecp(D, P2.parts)
        m1 = clique_degree_profile(G, P).maximum
        m2 = clique_degree_profile(D, P2).maximum
        results["ecp"] = P2.to_json()
        results["m"] = m2
        passed &= m2 == m1 + 1
        human.append(f"propagated ECP: {len(P2)} parts, m = {m2}")
        if args.vector:
            Y = family.lift_vector(parse_ints(args.vector), pi)
            inputs["vector"] = args.vector
            cert = bounds.attainment(D, P2)
            ok = bounds.verify_eigenvector(D, Y, -m2)
            results["lifted_vector"] = vector_to_json(Y)
            results["lift_certified"] = ok
            results["attained"] = cert.attained
            passed &= ok and cert.attained
            human.append(f"lifted vector certifies -{m2}: {ok}")
    return RunReport("family", inputs, results, passed, human)


def cmd_ecp_validate(args) -> RunReport:
    G, gtext = load_graph(args.graph)
    text = _read(args.ecp)
    inputs = {"graph": gtext, "ecp": text}
    data = _loads(text)
    try:
        P = ecp_from_json(G, data)
    except ParseError:
        raise
    except ECPError as exc:
        results = {"valid": False, "error": exc.to_json()}
        return RunReport("ecp-validate", inputs, results, False, [f"invalid: {exc}"], exit_code=exc.exit_code)
    prof = clique_degree_profile(G, P)
    results = {"valid": True, "parts": len(P), "clique_degrees": list(prof.per_vertex), "m": prof.maximum}
    return RunReport("ecp-validate", inputs, results, True, [f"valid: {len(P)} parts, m = {prof.maximum}"])


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ecpbounds", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="emit a JSON envelope")
    p.add_argument("--timing", action="store_true", help="include wall time in the JSON envelope")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        sp.add_argument("--timing", action="store_true", default=argparse.SUPPRESS)

    sp = sub.add_parser("bound", help="ECP lower bound and attainment certificate")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--ecp", required=True)
    common(sp)
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("queens", help="certify the least eigenvalue of Q(n)")
    sp.add_argument("action", nargs="?", default="certify", choices=["certify"])
    sp.add_argument("--n", required=True, help="range like 4..12, or a comma list")
    sp.add_argument("--cap", type=int, default=queens.DEFAULT_SIZE_CAP)
    sp.add_argument("--show-vector", help="window a,b of a basis vector to render")
    common(sp)
    sp.set_defaults(func=cmd_queens)

    sp = sub.add_parser("spectrum", help="Jacobi spectrum of a graph")
    sp.add_argument("--graph", required=True)
    common(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("content", help="exact content by branch and bound")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--limit-edges", type=int, default=20)
    common(sp)
    sp.set_defaults(func=cmd_content)

    sp = sub.add_parser("family", help="graph doubling")
    sp.add_argument("action", choices=["double"])
    sp.add_argument("--graph", required=True)
    sp.add_argument("--perm", help='one-line permutation, e.g. "1,5,6,4,2,3"; identity if omitted')
    sp.add_argument("--ecp", help="ECP of the input graph to propagate")
    sp.add_argument("--vector", help="certifying vector of the input graph to lift")
    common(sp)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("ecp-validate", help="validate an edge clique partition")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--ecp", required=True)
    common(sp)
    sp.set_defaults(func=cmd_ecp_validate)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        report = args.func(args)
    except ECPError as exc:
        if args.json:
            print(json.dumps({"command": args.command, "passed": False, "error": exc.to_json()}, sort_keys=True))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    report.wall_time = time.perf_counter() - t0
    if args.json:
        print(json.dumps(report.envelope(args.timing), sort_keys=True))
    else:
        print("\n".join(report.human))
        print("PASS" if report.passed else "FAIL")
    if report.exit_code is not None:
        return report.exit_code
    return EXIT_PASS if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
