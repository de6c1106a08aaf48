"""Command-line interface.

Subcommands: compute (matrix/spectra/energies for one graph), verify (all
inequality checkers, exit 1 on violation), scan (graph6 stream -> JSONL
records + summary), families (closed forms vs numeric values), and
oracle-check (max-flow vs brute-force disjoint-path counts).

Exit codes: 0 success, 1 mathematical violation or oracle disagreement,
2 input/usage error, 3 counterexamples found under --fail-on-counterexample.
All documents are JSON with floats at full precision.
"""

from __future__ import annotations

import argparse
import json
import sys
from random import Random

from . import __version__
from .bounds import (
    FAMILY_NAMES,
    closed_form_spectrum,
    evaluate_all_bounds,
    uniform_entries_premise,
)
from .disjoint import brute_force_disjoint_paths, max_disjoint_paths, path_matrix
from .enumeration import connected_graphs, random_graph
from .graph6 import HEADER, emit_graph6, parse_graph6
from .graphs import (
    Graph,
    antiprism,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    cycle,
    hypercube,
    line_graph,
    path_graph,
    prism,
    star,
    wheel,
)
from .explorer import ScanOptions, records_to_csv, scan_stream
from .spectral import (
    adjacency_spectrum,
    count_signs,
    path_spectrum,
    verify_single_positive_identity,
)

SCHEMA_VERSION = "1"

GRAPH_FAMILIES = {
    "complete": (1, lambda p: complete_graph(p)),
    "complete_bipartite": (2, lambda p, q: complete_bipartite(p, q)),
    "cycle": (1, lambda p: cycle(p)),
    "tree-path": (1, lambda p: path_graph(p)),
    "star": (1, lambda p: star(p)),
    "hypercube": (1, lambda d: hypercube(d)),
    "wheel": (1, lambda p: wheel(p)),
    "prism": (1, lambda p: prism(p)),
    "antiprism": (1, lambda p: antiprism(p)),
    "line_of_complete": (1, lambda p: line_graph(complete_graph(p))),
    "line_of_complete_bipartite": (2, lambda p, q: line_graph(complete_bipartite(p, q))),
    "hypercube_product": (2, lambda p, q: cartesian_product(hypercube(p), hypercube(q))),
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathenergy",
        description="Path matrices, path spectra and path energies of simple graphs.",
    )
    parser.add_argument("--version", action="version", version=f"pathenergy {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="path matrix, spectra and energies of one graph")
    _add_graph_source(p)
    p.add_argument("--format", choices=("json", "csv"), default="json",
                   help="csv emits only the path matrix rows")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run every bound checker; exit 1 on violation")
    _add_graph_source(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="scan a graph6 stream for conjecture verdicts")
    p.add_argument("--input", required=True, help="path to graph6 lines, or - for stdin")
    p.add_argument("--output", default="-", help="records destination (default stdout)")
    p.add_argument("--summary", default=None,
                   help="summary JSON destination (default stderr)")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--strict", action="store_true", help="abort on parse errors")
    p.add_argument("--max-n", type=int, default=40,
                   help="skip graphs larger than this (path matrix costs n^2 max-flows)")
    p.add_argument("--tol", type=float, default=None,
                   help="absolute sign-classification tolerance override")
    p.add_argument("--no-bounds", action="store_true", help="skip the bound checkers")
    p.add_argument("--fail-on-counterexample", action="store_true",
                   help="exit 3 when counterexamples are found")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("families", help="closed-form spectra vs numeric computation")
    p.add_argument("--family", choices=FAMILY_NAMES, default=None,
                   help="restrict to one family")
    p.add_argument("--max-params", type=int, default=None,
                   help="cap on the family parameter(s)")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("oracle-check",
                       help="compare max-flow vs brute-force disjoint path counts")
    p.add_argument("--max-n", type=int, default=7,
                   help="exhaustive up to min(max-n, 7); random graphs up to max-n (<= 10)")
    p.add_argument("--samples", type=int, default=100, help="random graphs to draw")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle_check)
    return parser


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", help="graph6 string")
    src.add_argument("--file", help="read the first graph6 line of this file")
    src.add_argument("--family", choices=sorted(GRAPH_FAMILIES), help="generate a family member")
    p.add_argument("--params", help="family parameters, e.g. 5 or 3,4")


def _resolve_graph(args) -> tuple[Graph, dict]:
    if args.graph6 is not None:
        g = parse_graph6(args.graph6)
        return g, {"graph6": args.graph6}
    if args.file is not None:
        with open(args.file) as fh:
            for line in fh:
                text = line.strip()
                if text and not text.startswith(HEADER):
                    return parse_graph6(text), {"file": args.file, "graph6": text}
        raise ValueError(f"no graph6 line found in {args.file}")
    if not args.params:
        raise ValueError("--family requires --params")
    params = tuple(int(x) for x in args.params.split(","))
    arity, build = GRAPH_FAMILIES[args.family]
    if len(params) != arity:
        raise ValueError(f"family {args.family} takes {arity} parameter(s), got {len(params)}")
    return build(*params), {"family": args.family, "params": list(params)}


def _document(command: str, inputs: dict, results: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    }


def _emit(doc: dict, stream=None) -> None:
    json.dump(doc, stream or sys.stdout, indent=2)
    print(file=stream or sys.stdout)


def cmd_compute(args) -> int:
    g, inputs = _resolve_graph(args)
    pm = path_matrix(g) if g.n else None
    if args.format == "csv":
        rows = pm.as_lists() if pm else []
        sys.stdout.write("\n".join(",".join(str(x) for x in row) for row in rows) + "\n")
        return 0
    spectrum = path_spectrum(g, pm=pm) if g.n else path_spectrum(g)
    adj = adjacency_spectrum(g)
    pos, zero, neg = count_signs(spectrum)
    results = {
        "n": g.n,
        "m": g.m,
        "graph6": emit_graph6(g) if g.n <= 62 else None,
        "path_matrix": pm.as_lists() if pm else [],
        "sign_tolerance": spectrum.tol,
        "path_spectrum": list(spectrum.values),
        "path_energy": spectrum.energy,
        "path_spectral_radius": spectrum.radius,
        "adjacency_spectrum": list(adj.values),
        "graph_energy": adj.energy,
        "sign_counts": {"positive": pos, "zero": zero, "negative": neg},
    }
    _emit(_document("compute", inputs, results))
    return 0


def cmd_verify(args) -> int:
    g, inputs = _resolve_graph(args)
    suite = evaluate_all_bounds(g)
    reports = {
        bound_id: [
            {"lhs": r.lhs, "rhs": r.rhs, "slack": r.slack, "holds": r.holds}
            for r in rs
        ]
        for bound_id, rs in suite.reports.items()
    }
    single_positive = None
    if g.n >= 1 and "pe_lower" in suite.reports:  # connected
        chk = verify_single_positive_identity(g)
        single_positive = {
            "holds_precondition": chk.holds_precondition,
            "pe_equals_2rho": chk.pe_equals_2rho,
            "positive_is_radius": chk.positive_is_radius,
            "path_energy": chk.path_energy,
            "spectral_radius": chk.spectral_radius,
            "positive_count": chk.positive_count,
        }
    results = {
        "n": g.n,
        "m": g.m,
        "bounds": reports,
        "skipped": list(suite.skipped),
        "all_hold": suite.all_hold,
        "single_positive_identity": single_positive,
    }
    _emit(_document("verify", inputs, results))
    return 0 if suite.all_hold else 1


def cmd_scan(args) -> int:
    if args.input == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.input) as fh:
            lines = fh.read().splitlines()
    options = ScanOptions(
        tol=args.tol,
        max_n=args.max_n,
        strict=args.strict,
        run_bounds=not args.no_bounds,
        jobs=args.jobs,
    )
    result = scan_stream(lines, options)

    if args.format == "csv":
        payload = records_to_csv(result.records)
    else:
        payload = "".join(json.dumps(r.to_dict()) + "\n" for r in result.records)
    if args.output == "-":
        sys.stdout.write(payload)
    else:
        with open(args.output, "w") as fh:
            fh.write(payload)

    summary_doc = _document(
        "scan",
        {
            "input": args.input,
            "max_n": args.max_n,
            "tol": args.tol,
            "strict": args.strict,
            "bounds": not args.no_bounds,
            "jobs": args.jobs,
        },
        result.summary.to_dict(),
    )
    if args.summary is None:
        _emit(summary_doc, stream=sys.stderr)
    else:
        with open(args.summary, "w") as fh:
            json.dump(summary_doc, fh, indent=2)
            fh.write("\n")

    if args.fail_on_counterexample and result.summary.conjecture1_counterexamples:
        return 3
    return 0


# families command: default parameter caps, instance builders and notes.
# The tree form holds for every tree on p vertices (demonstrated on the
# path); the generic regular form is demonstrated on cycles (r = 2).
_FAMILY_RANGES = {
    "complete": (8, lambda cap: [(p,) for p in range(2, cap + 1)]),
    "regular": (8, lambda cap: [(2, k) for k in range(3, cap + 1)]),
    "tree": (9, lambda cap: [(p,) for p in range(2, cap + 1)]),
    "complete_bipartite": (5, lambda cap: [(p, q) for p in range(1, cap + 1) for q in range(p, cap + 1)]),
    "hypercube": (4, lambda cap: [(d,) for d in range(1, cap + 1)]),
    "hypercube_product": (4, lambda cap: [(p, q) for p in range(1, cap) for q in range(1, cap + 1 - p)]),
    "wheel": (9, lambda cap: [(p,) for p in range(4, cap + 1)]),
    "line_of_complete": (6, lambda cap: [(p,) for p in range(3, cap + 1)]),
    "line_of_complete_bipartite": (4, lambda cap: [(p, q) for p in range(1, cap + 1) for q in range(p, cap + 1)]),
    "prism": (6, lambda cap: [(p,) for p in range(3, cap + 1)]),
    "antiprism": (6, lambda cap: [(p,) for p in range(3, cap + 1)]),
}

_FAMILY_INSTANCES = {
    "complete": lambda p: complete_graph(p),
    "regular": lambda r, k: cycle(k),
    "tree": lambda p: path_graph(p),
    "complete_bipartite": lambda p, q: complete_bipartite(p, q),
    "hypercube": lambda d: hypercube(d),
    "hypercube_product": lambda p, q: cartesian_product(hypercube(p), hypercube(q)),
    "wheel": lambda p: wheel(p),
    "line_of_complete": lambda p: line_graph(complete_graph(p)),
    "line_of_complete_bipartite": lambda p, q: line_graph(complete_bipartite(p, q)),
    "prism": lambda p: prism(p),
    "antiprism": lambda p: antiprism(p),
}

_FAMILY_NOTES = {
    "hypercube": (
        "negative eigenvalue is -d with multiplicity 2^d - 1; the sometimes "
        "quoted -1 variant violates the zero-trace constraint for d >= 2"
    ),
    "tree": "the closed form holds for every tree on p vertices; demonstrated on the path",
    "regular": (
        "valid only when every off-diagonal path count equals r "
        "(premise verified per instance); demonstrated on cycles"
    ),
}


def cmd_families(args) -> int:
    names = [args.family] if args.family else list(_FAMILY_RANGES)
    rows = []
    overall = 0.0
    for name in names:
        default_cap, make_params = _FAMILY_RANGES[name]
        cap = args.max_params if args.max_params is not None else default_cap
        for params in make_params(cap):
            cf = closed_form_spectrum(name, params)
            g = _FAMILY_INSTANCES[name](*params)
            pm = path_matrix(g) if g.n else None
            spectrum = path_spectrum(g, pm=pm)
            deviation = max(
                (abs(a - b) for a, b in zip(cf.expanded(), spectrum.values)),
                default=0.0,
            )
            overall = max(overall, deviation)
            premise_ok = None
            if cf.assumes_uniform_entries and pm is not None:
                r = round(-min(v for v, _ in cf.spectrum)) if len(cf.spectrum) > 1 else 0
                premise_ok = uniform_entries_premise(g, r, pm=pm)
            row = {
                "family": name,
                "params": list(params),
                "closed_spectrum": [[v, m] for v, m in cf.spectrum],
                "closed_path_energy": cf.path_energy,
                "numeric_path_energy": spectrum.energy,
                "max_deviation": deviation,
                "premise_ok": premise_ok,
            }
            if name in _FAMILY_NOTES:
                row["note"] = _FAMILY_NOTES[name]
            rows.append(row)
    results = {"rows": rows, "max_deviation": overall}
    _emit(_document("families", {"family": args.family, "max_params": args.max_params}, results))
    return 0


def cmd_oracle_check(args) -> int:
    if args.max_n > 10:
        raise ValueError("oracle-check is limited to --max-n <= 10 (brute force cost)")
    if args.max_n < 2:
        raise ValueError("--max-n must be at least 2")
    disagreements = []
    exhaustive_pairs = 0
    for n in range(2, min(args.max_n, 7) + 1):
        for g in connected_graphs(n):
            exhaustive_pairs += _compare_pairs(g, disagreements)

    rng = Random(args.seed)
    random_pairs = 0
    lo = 8 if args.max_n >= 8 else 2
    for _ in range(args.samples):
        n = rng.randint(lo, max(lo, args.max_n))
        g = random_graph(rng, n, rng.uniform(0.2, 0.5))
        random_pairs += _compare_pairs(g, disagreements)

    results = {
        "exhaustive_max_n": min(args.max_n, 7),
        "exhaustive_pairs": exhaustive_pairs,
        "random_samples": args.samples,
        "random_pairs": random_pairs,
        "seed": args.seed,
        "disagreements": disagreements,
    }
    _emit(_document("oracle-check",
                    {"max_n": args.max_n, "samples": args.samples, "seed": args.seed},
                    results))
    return 1 if disagreements else 0


def _compare_pairs(g: Graph, disagreements: list) -> int:
    pairs = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            flow = max_disjoint_paths(g, u, v)
            brute = brute_force_disjoint_paths(g, u, v)
            pairs += 1
            if flow != brute:
                disagreements.append(
                    {"graph6": emit_graph6(g), "u": u, "v": v,
                     "max_flow": flow, "brute_force": brute}
                )
    return pairs


if __name__ == "__main__":
    sys.exit(main())
