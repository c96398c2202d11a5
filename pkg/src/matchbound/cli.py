"""Command-line front end.

Subcommands: ``gen`` (graph families to edge-list text), ``match`` (run
a matcher, print the matching), ``verify`` (print a bound certificate,
exit nonzero on failure), ``bench`` (timings, stabilize vs exact).
Graphs are read from stdin unless ``-i`` names a file; reports go to
stdout and diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from .certify import certify
from .errors import InstanceTooLargeError, MatchboundError
from .estimators import ExactMatcher, GreedyMatcher, LocalSearchMatcher
from .exact import OracleLimits, exact_max_matching
from .graph import Graph, GraphFamilySpec, generate, parse_edgelist, write_edgelist
from .local_search import stabilize
from .matching import Matching, empty_matching, greedy_maximalize, write_matching

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_TOO_LARGE = 3

_ALGOS = ("greedy", "stabilize", "exact")


def _family_spec(family: str, params: Sequence[str]) -> GraphFamilySpec:
    def want(k: int):
        if len(params) != k:
            raise argparse.ArgumentTypeError(
                f"family {family!r} takes {k} parameter(s), got {len(params)}")
    if family == "random":
        want(3)
        return GraphFamilySpec.random(int(params[0]), Fraction(params[1]), int(params[2]))
    want(1)
    return GraphFamilySpec(family, int(params[0]))


def _read_graph(path: Optional[str]) -> Graph:
    if path is None or path == "-":
        return parse_edgelist(sys.stdin.read())
    with open(path) as fh:
        return parse_edgelist(fh.read())


def _run_algo(g: Graph, algo: str, limits: OracleLimits) -> Matching:
    if algo == "greedy":
        return greedy_maximalize(empty_matching(g))
    if algo == "stabilize":
        return stabilize(g)
    return exact_max_matching(g, limits)


def _parse_limits(text: str) -> OracleLimits:
    try:
        e, v = (int(x) for x in text.split(","))
        return OracleLimits(max_edges=e, max_vertices=v)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected --limits E,V with positive integers, got {text!r}") from None


def cmd_gen(args) -> int:
    spec = _family_spec(args.family, args.params)
    g = generate(spec)
    if args.output:
        with open(args.output, "w") as fh:
            write_edgelist(g, fh)
    else:
        write_edgelist(g, sys.stdout)
    return EXIT_OK


def cmd_match(args) -> int:
    g = _read_graph(args.input)
    m = _run_algo(g, args.algo, args.limits)
    write_matching(m, sys.stdout)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args.input)
    start = time.perf_counter()
    m = _run_algo(g, args.algo, args.limits)
    cert = certify(g, m)
    wall_us = int((time.perf_counter() - start) * 1e6)
    failures = cert.in_hypothesis_failures()
    if args.json:
        report = {
            "algorithm": args.algo,
            "input": args.input or "-",
            "certificate": cert.to_dict(),
            "failures": failures,
            "wall_time_us": wall_us,
        }
        print(json.dumps(report, indent=2))
    else:
        print(f"algorithm: {args.algo}")
        sys.stdout.write(cert.to_text())
        print(f"failures: {','.join(failures) if failures else 'none'}")
        print(f"wall_time_us: {wall_us}")
    return EXIT_CHECK_FAILED if failures else EXIT_OK


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    print("family size n m repeat stabilize_us exact_us")
    for size in sizes:
        spec = _family_spec(args.family, [str(size)])
        g = generate(spec)
        for rep in range(args.repeats):
            t0 = time.perf_counter()
            stabilize(g)
            t_stab = int((time.perf_counter() - t0) * 1e6)
            if (g.edge_count <= args.limits.max_edges
                    and g.vertex_count <= args.limits.max_vertices):
                t0 = time.perf_counter()
                exact_max_matching(g, args.limits)
                t_exact = str(int((time.perf_counter() - t0) * 1e6))
            else:
                t_exact = "skipped"
            print(f"{args.family} {size} {g.vertex_count} {g.edge_count} "
                  f"{rep} {t_stab} {t_exact}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchbound",
        description="Matchings with certified lower bounds k >= m/n and k >= 2m/(3d).")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a graph family as edge-list text")
    p_gen.add_argument("family", choices=("triangles", "path", "cycle", "complete",
                                          "star", "random"))
    p_gen.add_argument("params", nargs="+",
                       help="family parameters: r | n | leaves | n p seed")
    p_gen.add_argument("-o", "--output", help="output file (default stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_match = sub.add_parser("match", help="compute a matching and print it")
    p_match.add_argument("--algo", choices=_ALGOS, default="stabilize")
    p_match.add_argument("-i", "--input", help="edge-list file (default stdin)")
    p_match.add_argument("--limits", type=_parse_limits, default=OracleLimits(),
                         help="exact-oracle budget as E,V (default 40,24)")
    p_match.set_defaults(func=cmd_match)

    p_verify = sub.add_parser("verify", help="run a matcher and print its certificate")
    p_verify.add_argument("--algo", choices=_ALGOS, default="stabilize")
    p_verify.add_argument("-i", "--input", help="edge-list file (default stdin)")
    p_verify.add_argument("--limits", type=_parse_limits, default=OracleLimits())
    p_verify.add_argument("--json", action="store_true", help="machine-readable report")
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="time stabilize vs exact per size")
    p_bench.add_argument("--family", required=True,
                         choices=("triangles", "path", "cycle", "complete", "star"))
    p_bench.add_argument("--sizes", required=True, help="comma-separated sizes")
    p_bench.add_argument("--repeats", type=int, default=3)
    p_bench.add_argument("--limits", type=_parse_limits, default=OracleLimits())
    p_bench.set_defaults(func=cmd_bench)

    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except InstanceTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except MatchboundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
