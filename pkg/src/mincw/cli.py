"""Command-line interface.

Subcommands: enum (count minimal codewords of one graph), family (build a
named family graph), verify (closed forms vs exhaustive enumeration),
bounds (graph-parameter lower bounds), search (extremal scan over a graph
stream), witness (summarize a saved search result).

Exit codes: 0 success, 1 verification mismatch, 2 input error,
3 capability limit.  Counts print in decimal; vertex lists print 1-based.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile

from .bounds import lower_bounds
from .code import GraphCode, support_lines, support_records
from .errors import Graph6Error, LimitError
from .formulas import verification_rows
from .graph6 import iter_graph6_lines, parse_graph6, to_graph6
from .graphs import FamilySpec, Graph, build_family, graph_stats
from .search import (GraphStream, SearchResult, enumerate_labeled_connected,
                     run_search, witness_report, witness_summary)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3


class _CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _add_graph_input(parser: argparse.ArgumentParser):
    parser.add_argument("--family", metavar="KIND:PARAMS",
                        help="family spec such as path:5 or multipartite:2,1,1")
    parser.add_argument("--g6", metavar="STRING", help="a single graph6 string")
    parser.add_argument("--g6-file", metavar="PATH",
                        help="graph6 file, one graph per line")


def _input_graphs(args) -> list[Graph]:
    """Resolve the one graph input source; stdin lines are the fallback."""
    sources = [s for s in ("family", "g6", "g6_file") if getattr(args, s)]
    if len(sources) > 1:
        raise _CliError("choose exactly one of --family, --g6, --g6-file", EXIT_INPUT)
    if args.family:
        return [build_family(FamilySpec.parse(args.family))]
    if args.g6:
        return [parse_graph6(args.g6)]
    if args.g6_file:
        if not os.path.exists(args.g6_file):
            raise _CliError(f"no such file: {args.g6_file}", EXIT_INPUT)
        with open(args.g6_file, "r", encoding="ascii") as fh:
            return [parse_graph6(line) for _, line in iter_graph6_lines(fh)]
    graphs = [parse_graph6(line) for _, line in iter_graph6_lines(sys.stdin)]
    if not graphs:
        raise _CliError("no graph input (flag, file, or stdin lines expected)", EXIT_INPUT)
    return graphs


def _emit(args, text: str):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _default_threads() -> int:
    env = os.environ.get("MINCW_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def cmd_enum(args) -> int:
    chunks = []
    for g in _input_graphs(args):
        code = GraphCode(g)
        report = code.count_minimal(list_supports=args.list, use_filters=args.filters)
        if args.json:
            payload = report.to_dict()
            if args.list:
                payload["supports"] = support_records(code, report.supports)
            payload["graph6"] = to_graph6(g)
            chunks.append(json.dumps(payload))
        else:
            chunks.append(f"M = {report.count}")
            if args.list:
                chunks.extend(support_lines(code, report.supports))
    _emit(args, "\n".join(chunks))
    return EXIT_OK


def cmd_family(args) -> int:
    g = build_family(FamilySpec.parse(args.spec))
    if args.json:
        payload = {"spec": args.spec, "n": g.n, "graph6": to_graph6(g)}
        payload.update(graph_stats(g).to_dict())
        _emit(args, json.dumps(payload))
    else:
        _emit(args, to_graph6(g))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_n > 14:
        raise LimitError("verify enumerates up to 2^n subsets per family; max-n <= 14")
    if args.max_n < 1:
        raise _CliError("--max-n must be at least 1", EXIT_INPUT)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["family", "parameters", "formula", "enumerated", "match"])
    failures = []
    for row in verification_rows(args.max_n):
        writer.writerow([row[0], row[1], row[2], row[3], str(row[4]).lower()])
        if not row[4]:
            failures.append(row)
    _emit(args, buf.getvalue().rstrip("\n"))
    for row in failures:
        print(f"MISMATCH: {row[0]}:{row[1]} formula={row[2]} enumerated={row[3]}",
              file=sys.stderr)
    return EXIT_MISMATCH if failures else EXIT_OK


def cmd_bounds(args) -> int:
    chunks = []
    for g in _input_graphs(args):
        enumerated = GraphCode(g).count_minimal().count if args.enum else None
        report = lower_bounds(g, enumerated)
        if args.json:
            chunks.append(json.dumps(report.to_dict()))
        else:
            lines = [f"graph {report.graph6} (n = {report.n})"]
            for name, value in report.bounds.items():
                slack = ""
                if report.enumerated is not None:
                    slack = f"  (M = {report.enumerated}, slack {report.enumerated - value})"
                lines.append(f"  {name:>15} >= {value}{slack}")
            for name, reason in report.omitted.items():
                lines.append(f"  {name:>15} omitted: {reason}")
            chunks.append("\n".join(lines))
    _emit(args, "\n".join(chunks))
    return EXIT_OK


def cmd_search(args) -> int:
    if args.n is not None and args.g6_file:
        raise _CliError("choose one of --n or --g6-file", EXIT_INPUT)
    tmp_path = None
    if args.n is not None:
        stream = enumerate_labeled_connected(args.n)
    elif args.g6_file:
        if not os.path.exists(args.g6_file):
            raise _CliError(f"no such file: {args.g6_file}", EXIT_INPUT)
        stream = GraphStream.from_file(args.g6_file)
    else:
        # stdin fallback: buffer the lines into a temporary stream file
        lines = sys.stdin.read()
        if not lines.strip():
            raise _CliError("no graph input (use --n, --g6-file, or stdin)", EXIT_INPUT)
        fd, tmp_path = tempfile.mkstemp(suffix=".g6", text=True)
        with os.fdopen(fd, "w", encoding="ascii") as fh:
            fh.write(lines)
        stream = GraphStream.from_file(tmp_path)
    cap = None if args.witness_cap < 0 else args.witness_cap
    try:
        result = run_search(stream, threads=args.threads, witness_cap=cap,
                            checkpoint=args.checkpoint, resume=args.resume)
    finally:
        if tmp_path:
            os.unlink(tmp_path)
    if args.json:
        _emit(args, json.dumps(result.to_dict()))
    elif args.csv:
        m_any = "" if result.M_any is None else result.M_any
        _emit(args, "n,m,M_connected,M_any\n"
                    f"{result.n},{result.m_connected},{result.M_connected},{m_any}")
    else:
        _emit(args, witness_report(result))
    return EXIT_OK


def cmd_witness(args) -> int:
    if args.infile:
        with open(args.infile, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    else:
        payload = json.load(sys.stdin)
    result = SearchResult.from_dict(payload)
    if args.json:
        _emit(args, json.dumps(witness_summary(result)))
    else:
        _emit(args, witness_report(result))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mincw",
        description="Minimal codewords of the binary code generated by [I | A(G)]")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", help="count minimal codewords of a graph")
    _add_graph_input(p)
    p.add_argument("--list", action="store_true", help="also list minimal supports")
    p.add_argument("--filters", action="store_true",
                   help="enable the zero-information rejection filter")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("family", help="build a family graph, print graph6")
    p.add_argument("spec", help="family spec such as cycle:6")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="closed forms vs enumeration, CSV output")
    p.add_argument("--max-n", type=int, default=10, dest="max_n")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="graph-parameter lower bounds")
    _add_graph_input(p)
    p.add_argument("--enum", action="store_true",
                   help="also enumerate the exact count and report slack")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="extremal scan over a graph stream")
    p.add_argument("--n", type=int, help="built-in labeled enumeration, n <= 7")
    p.add_argument("--g6-file", metavar="PATH")
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--witness-cap", type=int, default=100,
                   help="witnesses kept per extreme; negative means unlimited")
    p.add_argument("--checkpoint", metavar="PATH",
                   help="append progress records to this sidecar file")
    p.add_argument("--resume", action="store_true",
                   help="skip lines already covered by the checkpoint file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("witness", help="summarize a saved search JSON")
    p.add_argument("--in", dest="infile", metavar="PATH",
                   help="search result JSON (default: stdin)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except LimitError as exc:
        print(f"capability limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (Graph6Error, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
