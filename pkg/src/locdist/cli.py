"""Command-line entry point: ``locdist {compute,verify,enumerate,construct}``.

Exit codes: 0 success, 1 a verdict is violated (discrepancy-flagged ones
only warn), 2 input could not be parsed, 3 a graph is above the solver cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from typing import Iterator

from . import lab
from .chromatics import invariant_report
from .enumeration import enumerate_connected_graphs, enumerate_trees
from .graph import (
    FamilySpec,
    Graph,
    GraphError,
    SizeCapError,
    default_cap,
    generate,
    parse_edge_list,
    parse_graph6,
    path,
    write_edge_list,
    write_graph6,
)
from .symmetry import canonical_form

EXIT_OK, EXIT_VIOLATED, EXIT_PARSE, EXIT_CAP = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("input")
    src.add_argument("--input", metavar="PATH", help="graph file (one graph6 per line, or an edge list)")
    src.add_argument("--format", choices=("g6", "edges"), default="g6", help="input/output graph format")
    src.add_argument("--family", help="generate a family graph instead of reading a file")
    src.add_argument("--params", default="", help="comma-separated family parameters")
    src.add_argument("--sweep", type=int, metavar="N", help="every connected graph with n <= N")
    src.add_argument("--trees", action="store_true", help="with --sweep: trees instead of all graphs")
    common.add_argument("--cap", type=int, default=None, help="solver vertex cap (default $LOCDIST_CAP or 16)")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--table", action="store_true", help="human-readable table instead of JSON lines")

    parser = argparse.ArgumentParser(prog="locdist", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("compute", parents=[common], help="exact chi, chi_L, chi_D, dim per graph")
    verify = sub.add_parser("verify", parents=[common], help="run theorem checks")
    verify.add_argument("--theorem", action="append", choices=lab.THEOREM_IDS,
                        help="restrict to this theorem id (repeatable)")
    sub.add_parser("enumerate", parents=[common], help="list graphs of a sweep as graph6")
    sub.add_parser("construct", parents=[common], help="print a family graph")
    return parser


def _read_graphs(path_: str, fmt: str) -> list[tuple[str, Graph]]:
    try:
        with open(path_, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path_}: {exc}", EXIT_PARSE) from exc
    if fmt == "edges":
        if not text.strip():
            return []
        try:
            return [(f"{path_}", parse_edge_list(text))]
        except GraphError as exc:
            raise CliError(f"{path_}: {exc}", EXIT_PARSE) from exc
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            graphs.append((f"{path_}:{lineno}", parse_graph6(line)))
        except GraphError as exc:
            raise CliError(f"{path_}: line {lineno}: {exc}", EXIT_PARSE) from exc
    return graphs


def _family(args) -> Graph:
    try:
        return generate(FamilySpec.parse(args.family, args.params))
    except GraphError as exc:
        raise CliError(f"family {args.family}({args.params}): {exc}", EXIT_PARSE) from exc


def _sweep_graphs(args) -> list[tuple[str, Graph]]:
    limit = 9 if args.trees else 7
    if not 1 <= args.sweep <= limit:
        raise CliError(f"--sweep must be between 1 and {limit}", EXIT_CAP)
    gen = enumerate_trees if args.trees else enumerate_connected_graphs
    return [(write_graph6(g), g) for n in range(1, args.sweep + 1) for g in gen(n)]


def _inputs(args) -> list[tuple[str, Graph]]:
    chosen = [x for x in (args.input, args.family, args.sweep) if x is not None]
    if len(chosen) != 1:
        raise CliError("give exactly one of --input, --family, --sweep", EXIT_PARSE)
    if args.workers < 1:
        raise CliError("--workers must be >= 1", EXIT_PARSE)
    if args.input is not None:
        return _read_graphs(args.input, args.format)
    if args.family is not None:
        g = _family(args)
        return [(f"{args.family}({args.params})", g)]
    return _sweep_graphs(args)


def _check_caps(graphs: list[tuple[str, Graph]], cap: int | None) -> None:
    limit = default_cap() if cap is None else cap
    for name, g in graphs:
        if g.n > limit:
            raise CliError(f"graph {name} ({write_graph6(g)}) has {g.n} vertices, above the cap of {limit}",
                           EXIT_CAP)


@contextmanager
def _output(path_: str | None) -> Iterator:
    if path_ is None:
        yield sys.stdout
    else:
        with open(path_, "w", encoding="utf-8") as fh:
            yield fh


def _compute_job(item: tuple[str, int | None]) -> dict:
    g6, cap = item
    return invariant_report(parse_graph6(g6), cap).to_dict()


def _table(rows: list[dict], columns: list[str]) -> str:
    cells = [[str(r.get(c, "")) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(x.ljust(w) for x, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def run_compute(args) -> int:
    graphs = _inputs(args)
    _check_caps(graphs, args.cap)
    # reports are computed from the graph6 text so workers stay picklable
    rows = lab.parallel_map(_compute_job, [(write_graph6(g), args.cap) for _, g in graphs],
                           args.workers)
    with _output(args.out) as out:
        if args.table:
            out.write(_table(rows, ["graph6", "n", "edges", "chi", "chi_L", "chi_D",
                                    "dim", "diam", "aut_order"]))
        else:
            for row in rows:
                out.write(json.dumps(row, sort_keys=True) + "\n")
    return EXIT_OK


_P7_KEY = canonical_form(path(7))


def _graph_verdicts(g: Graph, theorems: tuple[str, ...] | None,
                    cap: int | None = None) -> list[lab.TheoremVerdict]:
    wanted = set(lab.THEOREM_IDS if theorems is None else theorems)
    report = invariant_report(g, cap)
    out = lab.verify_graph(g, [t for t in lab.GRAPH_THEOREMS if t in wanted], report)
    if "T-trees-3" in wanted and g.is_tree():
        out.append(lab.check_tree_theorem(g, report))
    if "Ex-P7" in wanted and theorems is not None:
        if canonical_form(g) == _P7_KEY:
            out.append(lab.reproduce_p7_example())
        else:
            out.append(lab.TheoremVerdict("Ex-P7", write_graph6(g), lab.INAPPLICABLE,
                                          {"reason": "input is not the path on 7 vertices"}))
    return out


def _verify_job(item: tuple[str, tuple[str, ...] | None, int | None]) -> list[dict]:
    g6, theorems, cap = item
    return [v.to_record() for v in _graph_verdicts(parse_graph6(g6), theorems, cap)]


def run_verify(args) -> int:
    theorems = tuple(args.theorem) if args.theorem else None
    if args.family == "spider" and args.input is None and args.sweep is None:
        g = _family(args)
        spec = FamilySpec.parse(args.family, args.params)
        _check_caps([(f"spider({args.params})", g)], args.cap)
        verdicts = [lab.verify_spider(*spec.params, cap=args.cap)]
    else:
        graphs = _inputs(args)
        _check_caps(graphs, args.cap)
        items = [(write_graph6(g), theorems, args.cap) for _, g in graphs]
        rows = lab.parallel_map(_verify_job, items, args.workers)
        verdicts = [lab.TheoremVerdict(**rec) for row in rows for rec in row]
        if args.sweep is not None:
            verdicts = lab.sort_verdicts(verdicts)
    with _output(args.out) as out:
        if args.table:
            rows = [{"theorem": v.theorem_id, "graph": v.graph_key, "status": v.status,
                     "flag": v.flag or ""} for v in verdicts]
            out.write(_table(rows, ["theorem", "graph", "status", "flag"]))
        else:
            out.write(lab.verdict_lines(verdicts))
    flagged = [v for v in verdicts if v.status == lab.VIOLATED and v.flag]
    hard = [v for v in verdicts if v.status == lab.VIOLATED and not v.flag]
    for v in flagged:
        print(f"warning: {v.theorem_id} on {v.graph_key}: flagged discrepancy (stated result disagrees with exact solve)",
              file=sys.stderr)
    for v in hard:
        print(f"error: {v.theorem_id} violated on {v.graph_key}", file=sys.stderr)
    return EXIT_VIOLATED if hard else EXIT_OK


def run_enumerate(args) -> int:
    if args.sweep is None:
        raise CliError("enumerate needs --sweep N", EXIT_PARSE)
    graphs = _sweep_graphs(args)
    with _output(args.out) as out:
        if args.table:
            out.write(_table([{"n": g.n, "edges": g.m, "graph6": key} for key, g in graphs],
                             ["n", "edges", "graph6"]))
        else:
            for key, _ in graphs:
                out.write(key + "\n")
    return EXIT_OK


def run_construct(args) -> int:
    if args.family is None:
        raise CliError("construct needs --family NAME --params CSV", EXIT_PARSE)
    g = _family(args)
    with _output(args.out) as out:
        out.write(write_edge_list(g) if args.format == "edges" else write_graph6(g) + "\n")
    return EXIT_OK


COMMANDS = {"compute": run_compute, "verify": run_verify,
            "enumerate": run_enumerate, "construct": run_construct}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CliError as exc:
        print(f"locdist: {exc}", file=sys.stderr)
        return exc.code
    except SizeCapError as exc:
        print(f"locdist: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
