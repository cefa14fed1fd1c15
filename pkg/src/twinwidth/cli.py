"""Command-line interface.

Subcommands: reduce mincol, reduce 3col, verify-sequence, tww-exact,
chromatic, sat, nae, roundtrip.  Exit code 0 when all checks pass, 1
when a check fails (the failing invariant is named in the report), 2 on
usage or input errors.  The TWINWIDTH_BUDGET environment variable
overrides the default oracle node budget where --budget is not given.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from . import formats
from .cnf import Dialect
from .contraction import verify_d_sequence
from .errors import BudgetExceeded, ParseError, TwinwidthError
from .mincol import (build_mincol, build_mincol_3sequence,
                     mincol_assignment_from_coloring,
                     mincol_coloring_from_assignment)
from .oracles import chromatic_number, exact_twinwidth, is_k_colorable, is_proper, solve_nae, solve_sat
from .report import RunReport
from .threecol import (build_3col, build_3col_4sequence, lift_to_k,
                       threecol_assignment_from_coloring,
                       threecol_coloring_from_assignment)

DEFAULT_BUDGET = 20_000_000


def _budget(args) -> int | None:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("TWINWIDTH_BUDGET")
    if env is not None:
        return int(env)
    return DEFAULT_BUDGET


def _read(path: str) -> str:
    return Path(path).read_text()


def _maybe_write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)


def _profile_summary(report: RunReport, profile) -> None:
    report.add("width.max", profile.overall_width)
    report.add("width.argmax_step", profile.argmax_step)


def _finish(report: RunReport, started: float) -> int:
    report.add("wall_time_s", f"{time.perf_counter() - started:.3f}")
    sys.stdout.write(report.render())
    return 0 if report.ok else 1


def _cmd_reduce(args) -> int:
    started = time.perf_counter()
    kind = args.target
    report = RunReport(f"reduce {kind} {args.cnf}")
    dialect = Dialect.THREE_SAT if kind == "mincol" else Dialect.NAE_THREE_SAT
    formula = formats.parse_dimacs_cnf(_read(args.cnf), dialect)
    report.add("n", formula.n_vars)
    report.add("m", formula.n_clauses)
    if kind == "mincol":
        inst = build_mincol(formula)
        seq = build_mincol_3sequence(inst)
        bound = 3
        graph = inst.graph
        report.add("color_budget", inst.color_budget)
    else:
        inst = build_3col(formula)
        if args.k is not None and args.k != 3:
            lifted = lift_to_k(inst, args.k)
            graph, seq = lifted.graph, lifted.sequence
            report.add("k", args.k)
        else:
            graph, seq = inst.graph, build_3col_4sequence(inst)
        bound = 4
    report.add("N", graph.n)
    report.add("edges", len(graph.black))
    ok, profile = verify_d_sequence(graph, seq, bound)
    _profile_summary(report, profile)
    report.add(f"sequence_ok_at_{bound}", ok)
    if not ok:
        report.fail(f"generated sequence exceeds width {bound}")
    _maybe_write(args.graph, formats.write_trigraph(graph))
    _maybe_write(args.sequence, formats.write_sequence(seq))
    _maybe_write(args.roles, formats.write_roles(graph))
    return _finish(report, started)


def _cmd_verify_sequence(args) -> int:
    started = time.perf_counter()
    report = RunReport(f"verify-sequence {args.graph} {args.sequence}")
    g = formats.read_trigraph(_read(args.graph))
    seq = formats.read_sequence(_read(args.sequence))
    report.add("N", g.n)
    report.add("steps", len(seq.steps))
    ok, profile = verify_d_sequence(g, seq, args.max_width)
    _profile_summary(report, profile)
    report.add(f"sequence_ok_at_{args.max_width}", ok)
    if not ok:
        report.fail(f"width {profile.overall_width} exceeds bound {args.max_width}")
    return _finish(report, started)


def _cmd_tww_exact(args) -> int:
    started = time.perf_counter()
    report = RunReport(f"tww-exact {args.graph}")
    g = formats.read_trigraph(_read(args.graph))
    report.add("N", g.n)
    try:
        width, seq = exact_twinwidth(g, _budget(args))
    except BudgetExceeded as exc:
        report.skip(f"budget exceeded; best upper bound {exc.upper}")
        return _finish(report, started)
    report.add("twin_width", width)
    ok, _ = verify_d_sequence(g, seq, width)
    if not ok:
        report.fail("witness sequence does not verify at the reported width")
    _maybe_write(args.witness, formats.write_sequence(seq))
    return _finish(report, started)


def _cmd_chromatic(args) -> int:
    started = time.perf_counter()
    report = RunReport(f"chromatic {args.graph}")
    g = formats.read_trigraph(_read(args.graph))
    report.add("N", g.n)
    try:
        chi = chromatic_number(g, _budget(args))
    except BudgetExceeded as exc:
        report.skip(f"budget exceeded; bounds [{exc.lower}, {exc.upper}]")
        return _finish(report, started)
    report.add("chromatic_number", chi)
    ok, witness = is_k_colorable(g, chi, _budget(args))
    if not ok or not is_proper(g, witness):
        report.fail("witness coloring rejected by the propriety checker")
    _maybe_write(args.coloring, formats.write_coloring(witness))
    return _finish(report, started)


def _cmd_solve(args) -> int:
    started = time.perf_counter()
    nae = args.command == "nae"
    report = RunReport(f"{args.command} {args.cnf}")
    dialect = Dialect.NAE_THREE_SAT if nae else Dialect.THREE_SAT
    formula = formats.parse_dimacs_cnf(_read(args.cnf), dialect)
    report.add("n", formula.n_vars)
    report.add("m", formula.n_clauses)
    model = solve_nae(formula) if nae else solve_sat(formula)
    report.add("satisfiable", model is not None)
    if model is not None:
        report.add("assignment", " ".join(
            str(v if model[v] else -v) for v in sorted(model)))
        _maybe_write(args.assignment, formats.write_assignment(model))
    return _finish(report, started)


def _cmd_roundtrip(args) -> int:
    started = time.perf_counter()
    kind = "mincol" if args.mincol else "3col"
    report = RunReport(f"roundtrip --{kind} {args.cnf}")
    report.add("seed", args.seed if args.seed is not None else "none")
    budget = _budget(args)
    dialect = Dialect.THREE_SAT if kind == "mincol" else Dialect.NAE_THREE_SAT
    formula = formats.parse_dimacs_cnf(_read(args.cnf), dialect)
    report.add("n", formula.n_vars)
    report.add("m", formula.n_clauses)

    if kind == "mincol":
        inst = build_mincol(formula)
        graph, seq, bound, k = inst.graph, build_mincol_3sequence(inst), 3, inst.color_budget
        solve = solve_sat
        forward = mincol_coloring_from_assignment
        backward = mincol_assignment_from_coloring
    else:
        inst = build_3col(formula)
        graph, seq, bound, k = inst.graph, build_3col_4sequence(inst), 4, 3
        solve = solve_nae
        forward = threecol_coloring_from_assignment
        backward = threecol_assignment_from_coloring
    report.add("N", graph.n)
    report.add("edges", len(graph.black))

    ok, profile = verify_d_sequence(graph, seq, bound)
    _profile_summary(report, profile)
    report.add(f"sequence_ok_at_{bound}", ok)
    if not ok:
        report.fail(f"generated sequence exceeds width {bound}")

    model = solve(formula)
    report.add("satisfiable", model is not None)

    colorable = None
    try:
        colorable, witness = is_k_colorable(graph, k, budget)
        report.add(f"colorable_{k}", colorable)
    except BudgetExceeded:
        report.skip(f"{k}-colorability oracle over budget")
    if colorable is not None and colorable != (model is not None):
        report.fail("oracle colorability verdict disagrees with satisfiability")
    if colorable and witness is not None:
        backward(inst, witness)
        report.add("oracle_witness_roundtrip", "ok")

    if model is not None:
        col = forward(inst, model)
        if not is_proper(graph, col):
            report.fail("forward coloring is not proper")
        if kind == "mincol" and len(set(col.colors)) != k:
            report.fail("forward coloring does not use exactly 2n colors")
        backward(inst, col)
        report.add("forward_backward_roundtrip", "ok")
        if kind == "mincol":
            try:
                chi = chromatic_number(graph, budget)
                report.add("chromatic_number", chi)
                if chi != k:
                    report.fail("chromatic number differs from the color budget")
            except BudgetExceeded:
                report.skip("chromatic number oracle over budget")
    return _finish(report, started)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twinwidth")
    sub = parser.add_subparsers(dest="command", required=True)

    reduce_p = sub.add_parser("reduce", help="build a reduction instance")
    reduce_sub = reduce_p.add_subparsers(dest="target", required=True)
    for target in ("mincol", "3col"):
        p = reduce_sub.add_parser(target)
        p.add_argument("cnf")
        p.add_argument("--graph")
        p.add_argument("--sequence")
        p.add_argument("--roles")
        if target == "3col":
            p.add_argument("--k", type=int)
        p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("verify-sequence", help="replay a sequence against a bound")
    p.add_argument("graph")
    p.add_argument("sequence")
    p.add_argument("--max-width", type=int, required=True)
    p.set_defaults(func=_cmd_verify_sequence)

    p = sub.add_parser("tww-exact", help="exact twin-width of a tiny graph")
    p.add_argument("graph")
    p.add_argument("--budget", type=int)
    p.add_argument("--witness")
    p.set_defaults(func=_cmd_tww_exact)

    p = sub.add_parser("chromatic", help="exact chromatic number")
    p.add_argument("graph")
    p.add_argument("--budget", type=int)
    p.add_argument("--coloring")
    p.set_defaults(func=_cmd_chromatic)

    for name in ("sat", "nae"):
        p = sub.add_parser(name, help=f"solve a CNF under {name} semantics")
        p.add_argument("cnf")
        p.add_argument("--assignment")
        p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("roundtrip", help="full build/verify/solve/map pipeline")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--mincol", action="store_true")
    group.add_argument("--3col", dest="threecol", action="store_true")
    p.add_argument("cnf")
    p.add_argument("--budget", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=_cmd_roundtrip)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ParseError, TwinwidthError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
