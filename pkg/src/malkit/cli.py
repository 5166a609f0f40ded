"""malkit command line.

Exit codes: 0 success, 1 infeasible verdict from ``verify``, 2 unreadable or
malformed input, 3 infeasible instance or labeling, 4 exact-search budget
exceeded.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

from . import reductions
from .dcss import dcss_to_mal, mal_to_dcss
from .errors import BudgetExceeded, GraphError, InfeasibleError, MalError, ParseError
from .exact import ExactBudget
from .generators import random_connected
from .graph import (Graph, cycle_graph, eccentricities, format_graph, has_c4,
                    is_connected, metrics, read_graph, star_graph)
from .solve import ALGORITHMS, solve
from .temporal import (TemporalGraph, format_labeling, is_temporally_connected,
                       read_labeling)
from .variants import bidirect

EXIT_OK, EXIT_VERDICT, EXIT_PARSE, EXIT_INFEASIBLE, EXIT_BUDGET = 0, 1, 2, 3, 4

AGE_RULES = {
    "D": lambda d, r: d,
    "3halfD": lambda d, r: math.ceil(3 * d / 2),
    "5thirdsD": lambda d, r: math.ceil(5 * d / 3),
    "2R": lambda d, r: 2 * r,
    "2R1": lambda d, r: 2 * r + 1,
}
BENCH_ALGOS = ("trivial", "folklore-2r", "folklore-2r1", "three-half", "five-thirds",
               "via-dcss:tree", "via-dcss:plus2")
CSV_FIELDS = ("instance", "n", "m", "D", "R", "algorithm", "labels", "lifetime", "feasible", "ms")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _load_graph(path: str) -> Graph:
    try:
        return read_graph(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_labeling(path: str, directed: bool):
    try:
        return read_labeling(path, directed)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


# ---------------------------------------------------------------- subcommands

def cmd_stats(args) -> int:
    g = _load_graph(args.graph)
    info = {"n": g.n, "m": g.m, "directed": g.directed, "connected": is_connected(g)}
    if info["connected"]:
        ecc = eccentricities(g)
        info.update(D=int(max(ecc)), R=int(min(ecc)))
    else:
        info.update(D=None, R=None)
    info["c4"] = has_c4(g) if not g.directed else None
    print(json.dumps(info))
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    budget = ExactBudget(time_limit=args.time_limit)
    lab, report = solve(g, args.age, args.algo, budget)
    if report.feasible:
        out = args.output or str(Path(args.graph).with_suffix(".labeling"))
        Path(out).write_text(format_labeling(lab), encoding="utf-8")
    print(report.to_json())
    return EXIT_OK if report.feasible else EXIT_INFEASIBLE


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    lab = _load_labeling(args.labeling, g.directed)
    try:
        tg = TemporalGraph(g, lab)
    except GraphError as exc:
        raise ParseError(f"labeling does not fit the graph: {exc}") from None
    verdict = is_temporally_connected(tg, args.age)
    print(json.dumps({"connected": verdict.connected, "labels": lab.total,
                      "lifetime": lab.lifetime, "detail": verdict.describe()}))
    return EXIT_OK if verdict else EXIT_VERDICT


def _write_roles(art: reductions.ReductionArtifacts, args) -> None:
    target = args.roles or (args.output + ".roles.json" if args.output else None)
    if target:
        Path(target).write_text(art.roles_json() + "\n", encoding="utf-8")


def cmd_gen(args) -> int:
    kind, params = args.kind, args.params

    def need(k):
        if len(params) != k:
            raise ParseError(f"gen {kind} expects {k} argument(s), got {len(params)}")

    def as_int(s):
        try:
            return int(s)
        except ValueError:
            raise ParseError(f"expected an integer, got {s!r}") from None

    if kind == "random-connected":
        need(3)
        n, m, seed = map(as_int, params)
        g = random_connected(n, m, seed)
        _emit(format_graph(g, [f"random-connected n={n} m={m} seed={seed}"]), args.output)
    elif kind in ("star", "cycle"):
        need(1)
        k = as_int(params[0])
        g = star_graph(k) if kind == "star" else cycle_graph(k)
        _emit(format_graph(g, [f"{kind} on {k} vertices"]), args.output)
    elif kind == "sc-mal":
        need(1)
        sc = reductions.SetCoverInstance.from_json(_load_text(params[0]))
        art = reductions.sc_to_mal2(sc, args.x)
        _emit(format_graph(art.graph, [f"set cover -> MAL a=2, x={art.params['x']}"]), args.output)
        _write_roles(art, args)
    elif kind == "sc-dcss":
        need(2)
        sc = reductions.SetCoverInstance.from_json(_load_text(params[0]))
        art = reductions.sc_to_dcss(sc, as_int(params[1]), args.x)
        _emit(format_graph(art.graph, [f"set cover -> DCSS d={art.params['d']}, x={art.params['x']}"]),
              args.output)
        _write_roles(art, args)
    elif kind == "minrep-dcss":
        need(1)
        mr = reductions.MinRepInstance.from_json(_load_text(params[0]))
        art = reductions.minrep_to_dcss3(mr, args.x)
        _emit(format_graph(art.graph, [f"MIN-REP -> DCSS d=3, x={art.params['x']}"]), args.output)
        _write_roles(art, args)
    else:
        raise ParseError(f"unknown generator {kind!r}")
    return EXIT_OK


def cmd_convert(args) -> int:
    kind, params = args.kind, args.params
    if kind == "dcss-to-mal":
        if len(params) != 3:
            raise ParseError("convert dcss-to-mal expects <graph> <subgraph> <b>")
        g, h = _load_graph(params[0]), _load_graph(params[1])
        if not h.is_subgraph_of(g):
            raise InfeasibleError("the second graph is not a spanning subgraph of the first")
        try:
            b = int(params[2])
        except ValueError:
            raise ParseError(f"expected an integer b, got {params[2]!r}") from None
        _emit(format_labeling(dcss_to_mal(h, b)), args.output)
    elif kind == "mal-to-dcss":
        if len(params) != 2:
            raise ParseError("convert mal-to-dcss expects <graph> <labeling>")
        g = _load_graph(params[0])
        lab = _load_labeling(params[1], g.directed)
        try:
            tg = TemporalGraph(g, lab)
        except GraphError as exc:
            raise ParseError(f"labeling does not fit the graph: {exc}") from None
        _emit(format_graph(mal_to_dcss(tg)), args.output)
    elif kind == "bidirect":
        if len(params) != 1:
            raise ParseError("convert bidirect expects <graph>")
        g = _load_graph(params[0])
        try:
            _emit(format_graph(bidirect(g)), args.output)
        except GraphError as exc:
            raise ParseError(str(exc)) from None
    else:
        raise ParseError(f"unknown conversion {kind!r}")
    return EXIT_OK


def bench_rows(directory: str, age_rule: str, algos=BENCH_ALGOS):
    """One dict per (instance, algorithm), instances in file-name order."""
    rule = AGE_RULES[age_rule]
    for path in sorted(Path(directory).glob("*.graph")):
        g = _load_graph(str(path))
        m = metrics(g)
        a = rule(m.diameter, m.radius)
        for algo in algos:
            row = {"instance": path.name, "n": g.n, "m": g.m, "D": m.diameter, "R": m.radius,
                   "algorithm": algo}
            try:
                lab, rep = solve(g, a, algo)
                row.update(labels=rep.labelCount, lifetime=rep.lifetime,
                           feasible=rep.feasible, ms=rep.wallTimeMs)
            except InfeasibleError:
                row.update(labels="", lifetime="", feasible=False, ms="")
            yield row


def cmd_bench(args) -> int:
    algos = args.algo or BENCH_ALGOS
    for algo in algos:
        if algo not in ALGORITHMS:
            raise ParseError(f"unknown algorithm {algo!r}")
    out = open(args.output, "w", newline="", encoding="utf-8") if args.output else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for row in bench_rows(args.directory, args.age_rule, algos):
            writer.writerow(row)
    finally:
        if args.output:
            out.close()
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="malkit", description="Minimum temporal labelings of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("stats", help="n, m, diameter, radius, 4-cycle presence")
    s.add_argument("graph")
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("solve", help="compute a labeling within an age budget")
    s.add_argument("graph")
    s.add_argument("--age", type=int, required=True)
    s.add_argument("--algo", default="folklore-2r1", metavar="ALGO",
                   help="one of: " + ", ".join(ALGORITHMS))
    s.add_argument("-o", "--output", help="labeling file (default: <graph>.labeling)")
    s.add_argument("--time-limit", type=float, default=120.0,
                   help="seconds allowed to the exact search")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="check temporal connectivity of a labeling")
    s.add_argument("graph")
    s.add_argument("labeling")
    s.add_argument("--age", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", help="generate an instance",
                       description="kinds: random-connected N M SEED | star K | cycle K | "
                                   "sc-mal SC_FILE | sc-dcss SC_FILE D | minrep-dcss MR_FILE")
    s.add_argument("kind")
    s.add_argument("params", nargs="*")
    s.add_argument("-o", "--output")
    s.add_argument("--roles", help="role map path (default: <output>.roles.json)")
    s.add_argument("--x", type=int, help="number of copies in the gadget graphs")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("convert", help="move between MAL, DCSS and directed forms",
                       description="kinds: dcss-to-mal GRAPH SUBGRAPH B | mal-to-dcss GRAPH LABELING | "
                                   "bidirect GRAPH")
    s.add_argument("kind")
    s.add_argument("params", nargs="*")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("bench", help="run algorithms over a directory of .graph files, CSV out")
    s.add_argument("directory")
    s.add_argument("--age-rule", choices=sorted(AGE_RULES), required=True)
    s.add_argument("--algo", action="append", help="repeatable; default: all polynomial algorithms")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"malkit: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"malkit: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InfeasibleError, GraphError) as exc:
        # GraphError here means a disconnected or otherwise unusable graph
        print(f"malkit: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ValueError, MalError) as exc:
        print(f"malkit: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
