"""Command-line interface.

Graph inputs are graph6 strings; wherever ``--graph6`` is accepted, a value
naming an existing file is read as one graph6 string per line.  Family specs
use ``TAG:p1[,p2[,p3]]`` with the case-insensitive tags ``C``, ``STAR``,
``U``, ``A``, ``B``, ``F``, ``G1``, ``G2``, ``G3`` and ``H``, for example
``U:8``, ``F:2,1``, ``G3:1,1,4`` or ``H:9,3``.

All output is JSON (one object per line when several graphs are processed)
and integer coefficients are written as decimal strings.  Exit status is 0 on
success, 1 when a verified property does not hold, and 2 on usage errors or
exceeded computation bounds.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Iterator, Sequence

from .canon import canonical_key
from .copwin import MAX_GAME_ORDER, find_long_induced_cycle, is_chordal, is_copwin, is_copwin_game
from .families import CLOSED_FORM_TAGS, FamilySpec, build, classify_bicyclic, closed_form_cs, closed_form_cw
from .generate import GenSpec, enumerate_by_filter, enumerate_graphs, shard
from .graph import Graph, GraphError
from .graph6 import emit_graph6, parse_graph6, read_graph6_file
from .poly import format_poly
from .relpoly import (
    ReliabilityMeasure,
    connected_set_counts,
    copwin_set_counts,
    cs_poly_pivot,
    reliability_poly,
)
from .roots import DEFAULT_TOL, disk_scan, write_jsonl
from .umr import dominance, find_umr, verify_conjecture_H

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _strs(coeffs) -> list[str]:
    return [str(c) for c in coeffs]


def _iter_graph6(values: Sequence[str]) -> Iterator[Graph]:
    for v in values:
        if os.path.isfile(v):
            yield from read_graph6_file(v)
        else:
            yield parse_graph6(v)


def _input_graphs(args) -> list[Graph]:
    graphs: list[Graph] = []
    if getattr(args, "graph6", None):
        graphs += list(_iter_graph6(args.graph6))
    if getattr(args, "family", None):
        graphs += [build(FamilySpec.parse(f)) for f in args.family]
    if not graphs:
        raise UsageError("no input graphs: give --graph6 (literal or file) or --family")
    return graphs


def _add_graph_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", nargs="+", metavar="G6", help="graph6 literal(s) or file(s) of one-per-line literals")
    p.add_argument("--family", nargs="+", metavar="SPEC", help="family spec(s), e.g. U:8 or G3:1,1,4")


def _measure(text: str) -> ReliabilityMeasure:
    try:
        return ReliabilityMeasure.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _jobs(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("--jobs must be >= 1")
    return n


def _cyclomatic(text: str) -> int | None:
    if text.lower() == "all":
        return None
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("--cyclomatic must be >= 0 or 'all'")
    return n


# -- subcommands --------------------------------------------------------------

def cmd_poly(args) -> int:
    for g in _input_graphs(args):
        rec = {"graph6": emit_graph6(g), "kind": args.kind, "n": g.n, "m": g.m}
        if args.kind in ("cs", "cw"):
            if args.kind == "cs" and args.method == "pivot":
                counts = cs_poly_pivot(g).counts()
                counts += [0] * (g.n - len(counts))
            else:
                counts = connected_set_counts(g) if args.kind == "cs" else copwin_set_counts(g)
            rec["coefficients"] = _strs(counts)
            rec["basis"] = "x^1..x^n"
            rec["text"] = format_poly([0, *counts])
        else:
            poly = reliability_poly(g, ReliabilityMeasure.parse(args.kind))
            rec["coefficients"] = _strs(poly.coeffs)
            rec["basis"] = "p^0..p^d"
            rec["text"] = format_poly(poly.coeffs, "p")
            if args.at is not None:
                p = Fraction(args.at)
                if not 0 <= p <= 1:
                    raise UsageError(f"--at {args.at} outside [0, 1]")
                val = poly(p)
                rec["value"] = {"p": str(p), "exact": str(val), "float": float(val)}
        _emit(rec)
    return EXIT_OK


def cmd_copwin(args) -> int:
    for g in _input_graphs(args):
        ok, trace = is_copwin(g)
        rec = {
            "graph6": emit_graph6(g),
            "copwin": ok,
            "dismantling": list(trace.order),
            "dominators": list(trace.dominators),
            "chordal": is_chordal(g),
        }
        cyc = find_long_induced_cycle(g)
        rec["induced_cycle"] = cyc
        if g.n <= MAX_GAME_ORDER:
            rec["game"] = is_copwin_game(g)
        _emit(rec)
    return EXIT_OK


def cmd_family(args) -> int:
    for text in args.spec:
        spec = FamilySpec.parse(text)
        g = build(spec)
        rec = {
            "spec": str(spec),
            "graph6": emit_graph6(g),
            "n": g.n,
            "m": g.m,
            "edges": g.edges(),
        }
        if spec.tag in CLOSED_FORM_TAGS and (spec.tag != "F" or spec.params[1] == 0) and g.n >= 5:
            rec["closed_form_cs"] = _strs(closed_form_cs(spec).counts())
            rec["closed_form_cw"] = _strs(closed_form_cw(spec).counts())
        _emit(rec)
    return EXIT_OK


def cmd_classify(args) -> int:
    for g in _input_graphs(args):
        t = classify_bicyclic(g)
        _emit({"graph6": emit_graph6(g), "type": t.kind, "params": list(t.params), "base": str(t.spec)})
    return EXIT_OK


def cmd_enumerate(args) -> int:
    spec = GenSpec(args.n, args.cyclomatic)
    if args.method == "filter":
        graphs = enumerate_by_filter(spec)
    else:
        graphs = enumerate_graphs(spec)
    if args.shard:
        try:
            idx, total = (int(x) for x in args.shard.split("/"))
        except ValueError:
            raise UsageError(f"--shard expects I/K, got {args.shard!r}") from None
        graphs = shard(graphs, total, idx)
    if args.count:
        _emit({"n": args.n, "cyclomatic": args.cyclomatic, "method": args.method, "count": sum(1 for _ in graphs)})
        return EXIT_OK
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        for g in graphs:
            out.write(emit_graph6(g) + "\n")
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def _graph_arg(text: str) -> Graph:
    """A family spec such as ``U:6`` or a graph6 literal or file."""
    if ":" in text:
        return build(FamilySpec.parse(text))
    return next(_iter_graph6([text]))


def cmd_compare(args) -> int:
    g = _graph_arg(args.g)
    h = _graph_arg(args.h)
    rep = dominance(g, h, args.measure)
    _emit({"g": emit_graph6(g), "h": emit_graph6(h), **rep.to_record()})
    return EXIT_OK


def cmd_umr(args) -> int:
    res = find_umr(args.n, args.cyclomatic, args.measure, jobs=args.jobs)
    _emit(res.to_record())
    if args.expect is not None:
        want = {canonical_key(build(FamilySpec.parse(s))) for s in args.expect}
        got = {canonical_key(g) for g in res.winners}
        return EXIT_OK if got == want else EXIT_FAIL
    return EXIT_OK


def cmd_conjecture_h(args) -> int:
    rep = verify_conjecture_H(args.n, args.m, args.measure, jobs=args.jobs)
    _emit(rep.to_record())
    return EXIT_FAIL if args.strict and not rep.holds else EXIT_OK


def cmd_roots(args) -> int:
    if args.n is not None:
        if args.graph6 or args.family:
            raise UsageError("give either --n/--cyclomatic or explicit graphs, not both")
        graphs: list[Graph] | GenSpec = GenSpec(args.n, args.cyclomatic)
    else:
        graphs = _input_graphs(args)
    scan = disk_scan(graphs, args.measure, tol=args.tol, jobs=args.jobs)
    if args.out:
        write_jsonl(args.out, scan.records)
    else:
        for r in scan.records:
            _emit(r)
    _emit({"summary": scan.summary()})
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_checks

    scopes = args.scope or ["all"]

    def show(r) -> None:
        sys.stderr.write(r.line() + "\n")
        sys.stderr.flush()

    try:
        results = run_checks(scopes, jobs=args.jobs, appendix_path=args.appendix, progress=show)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    failed = [r for r in results if not r.passed and not r.finding]
    _emit({"checks": [r.to_record() for r in results], "all_passed": not failed})
    return EXIT_FAIL if failed else EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="copwinrel",
        description="Cop-win and connectivity reliability polynomials of graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="connected/cop-win set counts or a reliability polynomial")
    _add_graph_inputs(p)
    p.add_argument("--kind", default="cs", choices=["cs", "cw", "nrel", "ncrel", "ecrel"])
    p.add_argument("--method", default="direct", choices=["direct", "pivot"], help="route for --kind cs")
    p.add_argument("--at", help="exact rational probability at which to evaluate a reliability polynomial")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("copwin", help="cop-win status, dismantling order, chordality")
    _add_graph_inputs(p)
    p.set_defaults(func=cmd_copwin)

    p = sub.add_parser("family", help="build a named family member")
    p.add_argument("spec", nargs="+", help="family spec(s), e.g. B:8")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("classify", help="bicyclic type and base-graph parameters")
    _add_graph_inputs(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="connected graphs by order and cyclomatic number, as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cyclomatic", type=_cyclomatic, default=None, help="m >= 0, or 'all' (default)")
    p.add_argument("--method", default="augment", choices=["augment", "filter"])
    p.add_argument("--count", action="store_true", help="print only the number of graphs")
    p.add_argument("--shard", help="keep shard I of K (I/K), split by canonical-key hash")
    p.add_argument("--out", help="write graph6 lines to this file")
    p.add_argument("--jobs", type=_jobs, default=1, help="accepted for symmetry; generation is single-producer")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("compare", help="exact reliability dominance of two graphs")
    p.add_argument("--g", required=True, help="first graph: family spec, graph6 literal or file")
    p.add_argument("--h", required=True, help="second graph: family spec, graph6 literal or file")
    p.add_argument("--measure", type=_measure, default=ReliabilityMeasure.NODE_COPWIN)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("umr", help="uniformly most reliable graphs of a class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cyclomatic", type=int, required=True)
    p.add_argument("--measure", type=_measure, default=ReliabilityMeasure.NODE_COPWIN)
    p.add_argument("--jobs", type=_jobs, default=1)
    p.add_argument("--expect", nargs="*", metavar="SPEC",
                   help="exit 1 unless the winners are exactly these family specs (none: no winner)")
    p.set_defaults(func=cmd_umr)

    p = sub.add_parser("conjecture-h", help="compare H(n, m) against every m-cyclic graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--measure", type=_measure, default=ReliabilityMeasure.NODE_COPWIN)
    p.add_argument("--jobs", type=_jobs, default=1)
    p.add_argument("--strict", action="store_true", help="exit 1 when a counterexample is found")
    p.set_defaults(func=cmd_conjecture_h)

    p = sub.add_parser("roots", help="complex roots and the |z-1| <= 1 disk scan")
    _add_graph_inputs(p)
    p.add_argument("--n", type=int, help="scan a whole class instead of explicit graphs")
    p.add_argument("--cyclomatic", type=_cyclomatic, default=None)
    p.add_argument("--measure", type=_measure, default=ReliabilityMeasure.EDGE_COPWIN)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--out", help="write one JSON record per graph to this file")
    p.add_argument("--jobs", type=_jobs, default=1)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("verify-paper", help="run the reproduction checks")
    p.add_argument("--scope", action="append",
                   help="check group (repeatable): theta-table, closed-forms, pivot, chordal, unicyclic-umr, "
                        "bicyclic-umr, no-umr, dominance, invariants, copwin-oracle, disk, conjecture-h, appendix, all")
    p.add_argument("--appendix", help="write the regenerated order-7 bicyclic table here")
    p.add_argument("--jobs", type=_jobs, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, GraphError, OSError, ValueError) as exc:
        sys.stderr.write(f"copwinrel {args.command}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
