"""Command-line front end.

Exit codes for ``check``: 0 2-connected, 1 2-edge-connected only,
2 not 2-edge-connected, 3 not connected, 64 bad input or usage.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import _backend, oracle
from .bench import bench_sizes, time_check
from .connectivity import Verdict, analyze
from .errors import GraphError
from .graph import Format, Graph, parse
from .report import format_text, make_report
from .verify import run as run_verify

EX_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


class InputError(Exception):
    pass


def _add_input(p):
    p.add_argument("input", nargs="?", help="graph file, or '-' for stdin")
    p.add_argument("--format", choices=[f.value for f in Format], default=Format.EDGELIST.value)
    p.add_argument("--fixture", choices=sorted(oracle.FIXTURES), help="use a built-in graph instead of a file")
    p.add_argument("--root", type=int, default=0, help="DFS root vertex (default 0)")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--backend", choices=_backend.available(), default=None)


def _load(args) -> tuple[Graph, str, float]:
    t = time.perf_counter()
    try:
        if args.fixture:
            if args.input:
                raise InputError("give either an input path or --fixture, not both")
            g, source = oracle.fixture(args.fixture), f"fixture:{args.fixture}"
        elif args.input is None:
            raise InputError("no input: give a path, '-' for stdin, or --fixture")
        elif args.input == "-":
            g, source = parse(sys.stdin.read(), args.format), "<stdin>"
        else:
            with open(args.input) as fh:
                g, source = parse(fh.read(), args.format), args.input
    except (GraphError, OSError, UnicodeDecodeError) as exc:
        raise InputError(str(exc)) from exc
    if g.n and not 0 <= args.root < g.n:
        raise InputError(f"root {args.root} outside 0..{g.n - 1}")
    return g, source, (time.perf_counter() - t) * 1e3


def cmd_check(args) -> int:
    g, source, parse_ms = _load(args)
    rep = make_report(g, source=source, fmt=args.format, root=args.root, parse_ms=parse_ms,
                      with_chains=args.chains, backend=args.backend)
    if args.json:
        json.dump(rep, sys.stdout)
        sys.stdout.write("\n")
    else:
        print(format_text(rep, g.labels))
    return Verdict.from_text(rep["verdict"]).exit_code


def cmd_chains(args) -> int:
    g, _, _ = _load(args)
    res = analyze(g, args.root, args.backend)
    c = res.decomposition
    chains = [ch.to_json() for ch in c] if c is not None else []
    if args.json:
        json.dump({"verdict": res.verdict.text, "chains": chains}, sys.stdout)
        sys.stdout.write("\n")
    else:
        print(res.verdict.text)
        for ch in chains:
            print(f"C{ch['index']} {ch['kind']}: {' '.join(map(str, ch['vertices']))}")
    return 0


def cmd_components(args) -> int:
    g, source, parse_ms = _load(args)
    rep = make_report(g, source=source, fmt=args.format, root=args.root, parse_ms=parse_ms,
                      backend=args.backend)
    keys = ["verdict", "bridges", "cut_vertices", "two_edge_components", "blocks", "block_cut_tree",
            "ear_decomposition"]
    out = {k: rep[k] for k in keys}
    if args.json:
        json.dump(out, sys.stdout)
        sys.stdout.write("\n")
        return 0
    print(out["verdict"])
    if out["blocks"] is None:
        print("graph is not connected; no components reported")
        return 0
    for i, comp in enumerate(out["two_edge_components"]):
        print(f"2ec {i}: {' '.join(map(str, comp))}")
    for i, b in enumerate(out["blocks"]):
        tag = " (trivial)" if b["trivial"] else ""
        print(f"block {i}{tag}: vertices {' '.join(map(str, b['vertices']))}")
    bct = out["block_cut_tree"]
    print(f"block-cut tree: {len(bct['nodes'])} nodes, {len(bct['edges'])} edges")
    ear = out["ear_decomposition"]
    if ear is not None:
        print(f"ear decomposition: {ear['kind']} {'valid' if ear['valid'] else 'INVALID'}")
    return 0


def cmd_verify(args) -> int:
    if args.exhaustive:
        family = oracle.ExhaustiveLabeled(args.n)
    else:
        family = oracle.RandomConnected(args.n, args.count, args.seed)
    summary = run_verify(oracle.generate(family), backend=args.backend, inject_fault=args.inject_fault)
    if args.json:
        json.dump({
            "family": type(family).__name__, "n": args.n, "count": summary.graphs,
            "seed": None if args.exhaustive else args.seed, "rng": oracle.RNG_ALGORITHM,
            "graphs": summary.graphs, "mismatches": summary.mismatches, "verdicts": summary.verdicts,
            "first_counterexample": summary.first_counterexample, "problems": summary.first_problems,
        }, sys.stdout)
        sys.stdout.write("\n")
    else:
        print(summary.line())
        if summary.first_counterexample is not None:
            print("first counterexample (edgelist):")
            print(summary.first_counterexample, end="")
            for p in summary.first_problems:
                print(f"  {p}")
    return 1 if summary.mismatches else 0


def cmd_bench(args) -> int:
    backends = _backend.available() if args.backend == "all" else [args.backend or _backend.DEFAULT]
    if args.fixture:
        g = oracle.fixture(args.fixture)
        rows = []
        for b in backends:
            med = time_check(g, b, args.repeat)
            rows.append({"n": g.n, "m": g.m, "median_ms": med * 1e3,
                         "per_edge_ns": med * 1e9 / max(g.m, 1), "backend": b})
    else:
        rows = bench_sizes(args.n, args.chords, args.seed, args.repeat, backends)
    if args.csv:
        w = csv.DictWriter(sys.stdout, fieldnames=["n", "m", "median_ms", "per_edge_ns", "backend"])
        w.writeheader()
        w.writerows(rows)
    else:
        print(f"{'backend':>9} {'n':>9} {'m':>9} {'median ms':>11} {'ns/edge':>9}")
        for r in rows:
            print(f"{r['backend']:>9} {r['n']:>9} {r['m']:>9} {r['median_ms']:>11.3f} {r['per_edge_ns']:>9.1f}")
    return 0


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chaindecomp", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="classify a graph and report bridges, cut vertices, components")
    _add_input(c)
    c.add_argument("--chains", action="store_true", help="include the chain list in the JSON report")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("chains", help="dump the chain decomposition")
    _add_input(c)
    c.set_defaults(func=cmd_chains)

    c = sub.add_parser("components", help="dump 2-edge-connected components, blocks, block-cut tree")
    _add_input(c)
    c.set_defaults(func=cmd_components)

    c = sub.add_parser("verify", help="compare against brute-force oracles")
    c.add_argument("--n", type=_positive, default=8, help="vertex count (upper bound for random graphs)")
    c.add_argument("--count", type=_positive, default=1000)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--exhaustive", action="store_true", help="all labeled graphs on exactly n vertices")
    c.add_argument("--inject-fault", action="store_true", help="flip the first verdict (harness self-test)")
    c.add_argument("--json", action="store_true")
    c.add_argument("--backend", choices=_backend.available(), default=None)
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("bench", help="time DFS + chains + verdict on random 2-connected graphs")
    c.add_argument("--n", type=_positive, nargs="+", default=[25_000, 250_000], help="vertex counts")
    c.add_argument("--chords", type=float, default=3.0, help="extra chords per vertex (m = n + chords*n)")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--repeat", type=_positive, default=5)
    c.add_argument("--fixture", choices=sorted(oracle.FIXTURES))
    c.add_argument("--csv", action="store_true")
    c.add_argument("--backend", choices=_backend.available() + ["all"], default=None)
    c.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, oracle.InvalidParams) as exc:
        print(f"chaindecomp: {exc}", file=sys.stderr)
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
