"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 verification mismatch
(a reproduced value disagrees with its published reference), 3 budget
expiry with only a lower bound when --strict is set.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .catalog import catalog, cluster_spec, validate_cluster
from .classbounds import GRANULARITIES, aggregated_lp_bound
from .fileio import (FormatError, bound_to_text, format_fraction,
                     graph_from_text, graph_to_text, parse_fraction,
                     selection_from_text, selection_ids_from_text,
                     selection_to_text)
from .halfdom import deficiency, density, is_half_dependent
from .quotient import QUOTIENTS, build_graph
from .render import render_svg
from .solver import (pinned_density_bound, solve_exact,
                     weighted_density_bound)
from .tables import (TABLE_IDS, TableSpec, format_report, report_to_json,
                     reproduce_table, write_witness_files)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_BUDGET = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse default exits 2; the CLI
        self.print_usage(sys.stderr)  # contract reserves 2 for mismatches
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _load_graph(path: str):
    return graph_from_text(Path(path).read_text(encoding="utf-8"))


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _cmd_tess(args) -> int:
    if args.tess_cmd == "list":
        for kind in catalog():
            print(kind)
        return EXIT_OK
    spec = cluster_spec(args.kind)
    print(f"kind      {spec.kind}")
    print(f"tiles     {' '.join(f'{k}:{s}-gon' for k, s in spec.tiles)}")
    print(f"intra     {' '.join(f'{a}-{b}' for a, b in spec.intra_edges)}")
    for a, b, (di, dj) in spec.inter_edges:
        print(f"inter     {a}-{b} offset ({di},{dj})")
    diags = validate_cluster(spec)
    print(f"validate  {'ok' if not diags else '; '.join(diags)}")
    return EXIT_OK


def _cmd_graph_build(args) -> int:
    graph = build_graph(args.kind, args.m, args.n, args.quotient)
    _write(args.out, graph_to_text(graph))
    print(f"built {args.quotient} graph of {graph.kind}: "
          f"{graph.num_vertices} vertices, {graph.num_edge_records()} edge records",
          file=sys.stderr)
    return EXIT_OK


def _cmd_solve(args) -> int:
    graph = _load_graph(args.graph)
    target = parse_fraction(args.target) if args.target else None
    res = solve_exact(graph, method=args.method, time_limit=args.time_limit,
                      deterministic=args.deterministic, target=target)
    print(f"kind={graph.kind} quotient={graph.quotient} m={graph.m} n={graph.n}")
    print(f"cardinality={res.best_cardinality} of {graph.num_vertices}")
    print(f"density={format_fraction(res.density)}")
    print(f"status={res.status}")
    print(f"nodes={res.nodes} elapsed={res.elapsed:.2f}s")
    if args.out:
        _write(args.out, selection_to_text(res.witness))
    if target is not None and res.density < target:
        print(f"target {format_fraction(target)} not reached", file=sys.stderr)
        if args.strict and res.status == "lower_bound_only":
            return EXIT_BUDGET  # budget ran out before reaching the target
        return EXIT_OK  # definitive: the optimum lies below the target
    if args.strict and res.status == "lower_bound_only" and target is None:
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_check(args) -> int:
    graph = _load_graph(args.graph)
    sel = selection_from_text(Path(args.selection).read_text(encoding="utf-8"),
                              graph)
    feasible = is_half_dependent(graph, sel)
    rep = deficiency(graph, sel)
    print(f"selected={sel.count} of {graph.num_vertices}")
    print(f"density={format_fraction(density(graph, sel))}")
    print(f"half_dependent={'yes' if feasible else 'no'}")
    print(f"max_delta={rep.max_delta}")
    print(f"global_delta={format_fraction(rep.global_delta)}")
    return EXIT_OK if feasible else EXIT_MISMATCH


def _cmd_bound(args) -> int:
    if args.bound_cmd == "aggregate":
        rep = aggregated_lp_bound(args.kind, args.granularity)
        sys.stdout.write(bound_to_text(rep))
        return EXIT_OK
    graph = _load_graph(args.graph)
    if args.bound_cmd == "lp":
        rep = weighted_density_bound(graph, [1] * graph.num_vertices)
        sys.stdout.write(bound_to_text(rep))
        return EXIT_OK
    if args.bound_cmd == "pinned":
        _, zero_ids = selection_ids_from_text(
            Path(args.zeros).read_text(encoding="utf-8"))
        rep = pinned_density_bound(graph, zero_ids, method=args.method,
                                   time_limit=args.time_limit)
        sys.stdout.write(bound_to_text(rep))
        if args.strict and rep.certificate.get("status") != "optimal":
            return EXIT_BUDGET
        return EXIT_OK
    # weighted
    if not args.interior and not args.weights:
        print("error: bound weighted needs --weights or --interior",
              file=sys.stderr)
        return EXIT_USAGE
    if args.interior:
        if graph.quotient != "klein":
            print("error: --interior applies to klein graphs", file=sys.stderr)
            return EXIT_USAGE
        side = graph.n - 2
        weights = [1 if (1 <= r.i <= side and 1 <= r.j <= side) else 0
                   for r in graph.vertices]
    else:
        weights = [Fraction(0)] * graph.num_vertices
        for line_no, line in enumerate(
                Path(args.weights).read_text(encoding="utf-8").splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            vid_text, _, frac_text = line.partition(" ")
            weights[int(vid_text)] = parse_fraction(frac_text.strip(), line_no)
    rep = weighted_density_bound(graph, weights)
    sys.stdout.write(bound_to_text(rep))
    return EXIT_OK


def _cmd_table(args) -> int:
    spec = TableSpec(id=args.id, max_n=args.max_n, time_limit=args.time_limit)
    report = reproduce_table(spec)
    sys.stdout.write(format_report(report))
    if args.out:
        _write(args.out, report_to_json(report))
    if args.witness_dir:
        for path in write_witness_files(report, args.witness_dir):
            print(f"witness written: {path}", file=sys.stderr)
    if any(row.agrees is False for row in report.rows):
        return EXIT_MISMATCH
    if args.strict and report.any_budget_expired:
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_render(args) -> int:
    graph = _load_graph(args.graph)
    sel = None
    if args.selection:
        sel = selection_from_text(
            Path(args.selection).read_text(encoding="utf-8"), graph)
    _write(args.out, render_svg(graph, sel, scale=args.scale))
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="tessdom", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("tess", help="list or inspect tessellation kinds")
    tsub = p.add_subparsers(dest="tess_cmd", required=True)
    tsub.add_parser("list", help="print the 11 canonical kind names")
    q = tsub.add_parser("show", help="print one cluster specification")
    q.add_argument("--kind", required=True)
    p.set_defaults(func=_cmd_tess)

    p = sub.add_parser("graph", help="build quotient graphs")
    gsub = p.add_subparsers(dest="graph_cmd", required=True)
    q = gsub.add_parser("build", help="build and serialize a quotient graph")
    q.add_argument("--kind", required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--quotient", choices=QUOTIENTS, default="torus")
    q.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_graph_build)

    p = sub.add_parser("solve", help="maximize a half-dependent set exactly")
    p.add_argument("--graph", required=True)
    p.add_argument("--method", choices=("auto", "brute", "bnb"), default="auto")
    p.add_argument("--time-limit", type=float, default=None)
    p.add_argument("--deterministic", action="store_true", default=True)
    p.add_argument("--no-deterministic", dest="deterministic",
                   action="store_false")
    p.add_argument("--target", default=None,
                   help="density p/q; stop once a selection this dense is found")
    p.add_argument("--out", default=None, help="write the witness selection")
    p.add_argument("--strict", action="store_true",
                   help="exit 3 when only a lower bound was obtained")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("check", help="verify a selection file against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--selection", required=True)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("bound", help="density upper bounds")
    bsub = p.add_subparsers(dest="bound_cmd", required=True)
    q = bsub.add_parser("aggregate", help="aggregated class-LP bound")
    q.add_argument("--kind", required=True)
    q.add_argument("--granularity", choices=GRANULARITIES, default="polygon")
    q = bsub.add_parser("lp", help="LP relaxation bound of one graph")
    q.add_argument("--graph", required=True)
    q = bsub.add_parser("pinned", help="bound with vertices forced off")
    q.add_argument("--graph", required=True)
    q.add_argument("--zeros", required=True,
                   help="selection file listing the pinned vertex ids")
    q.add_argument("--method", choices=("auto", "brute", "bnb"), default="auto")
    q.add_argument("--time-limit", type=float, default=None)
    q.add_argument("--strict", action="store_true")
    q = bsub.add_parser("weighted", help="weighted LP bound")
    q.add_argument("--graph", required=True)
    q.add_argument("--weights", default=None,
                   help="file of `id fraction` lines")
    q.add_argument("--interior", action="store_true",
                   help="unit weights on the interior of a klein parallelogram")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("table", help="reproduce a published table")
    p.add_argument("--id", required=True, choices=TABLE_IDS)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--time-limit", type=float, default=None,
                   help="per-cell budget in seconds")
    p.add_argument("--out", default=None, help="write machine-readable JSON")
    p.add_argument("--witness-dir", default=None,
                   help="store re-verifiable witness selection files here")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("render", help="render a graph (and selection) as SVG")
    p.add_argument("--graph", required=True)
    p.add_argument("--selection", default=None)
    p.add_argument("--out", required=True)
    p.add_argument("--scale", type=float, default=36.0)
    p.set_defaults(func=_cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
