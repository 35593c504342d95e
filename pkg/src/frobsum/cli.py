"""Command-line front end.

Exit codes: 0 success, 1 precondition/usage error, 2 budget or cap refusal.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import asymptotics, frobenius, oracle
from .characters import dimension, mn_character
from .errors import BudgetError, PreconditionError
from .partitions import (
    FamilySelector,
    enumerate_partitions,
    format_parts,
    parse_cycle_class,
    parse_family,
    parse_partition,
)
from .reports import ScanReport, decimal_str, rational_cells


class CLIUsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CLIUsageError(f"{message}\n{self.format_usage()}")


def _parse_n_list(text: str):
    try:
        return [int(tok) for tok in str(text).split(",") if tok.strip()]
    except ValueError:
        raise PreconditionError(f"cannot parse degree list {text!r}")


def _emit(report: ScanReport, fmt: str) -> None:
    print(report.render(fmt))


def _value_report(title, fmt, **cells) -> None:
    """Single-value commands print bare values in text mode and a one-row
    table otherwise, so csv/json pipelines see the same cells."""
    if fmt == "text":
        print(cells[next(iter(cells))])
        return
    report = ScanReport(title=title, columns=tuple(cells))
    report.add_row(**cells)
    _emit(report, fmt)


def _cmd_partitions(args) -> int:
    selector = parse_family(args.family) if args.family else FamilySelector.unrestricted()
    report = ScanReport(title=f"partitions of {args.n}", columns=("partition",))
    count = 0
    for shape in enumerate_partitions(args.n, selector):
        report.add_row(partition=format_parts(shape))
        count += 1
    if args.format == "text":
        for row in report.rows:
            print(row["partition"])
        print(f"total {count}")
    else:
        _emit(report, args.format)
    return 0


def _cmd_chi(args) -> int:
    shape = parse_partition(args.shape)
    cls = parse_cycle_class(args.cycle_class)
    if args.n is not None and (shape.n != args.n or cls.n != args.n):
        raise PreconditionError(
            f"--n {args.n} does not match shape ({shape.n}) or class ({cls.n})")
    value = mn_character(shape, cls)
    _value_report("character value", args.format,
                  value=value, shape=format_parts(shape),
                  cycle_class=format_parts(cls.lengths))
    return 0


def _cmd_dim(args) -> int:
    shape = parse_partition(args.shape)
    _value_report("dimension", args.format,
                  value=dimension(shape), shape=format_parts(shape))
    return 0


def _cmd_ysum(args) -> int:
    selector = parse_family(args.family) if args.family else None
    classes = [parse_cycle_class(c) for c in (args.c1, args.c2, args.c3)]
    s = frobenius.family_sum(args.n, selector, *classes, workers=args.threads)
    cells = {"family": selector.describe() if selector else "all", "terms": s.terms}
    cells.update(rational_cells("value", s.value))
    if args.format == "text":
        print(f"{cells['value_exact']} = {cells['value']}  ({s.terms} diagrams)")
    else:
        report = ScanReport(title="family character sum",
                            columns=("family", "value", "value_exact", "terms"))
        report.add_row(**cells)
        _emit(report, args.format)
    return 0


def _cmd_count(args) -> int:
    classes = [parse_cycle_class(c) for c in (args.c1, args.c2, args.c3)]
    count = frobenius.triple_count(*classes, workers=args.threads)
    _value_report("triple count", args.format, value=count)
    return 0


def _cmd_regroup(args) -> int:
    classes = [parse_cycle_class(c) for c in (args.c1, args.c2, args.c3)]
    residual = frobenius.regroup_residual(args.n, args.k, *classes)
    cells = rational_cells("residual", residual)
    if args.format == "text":
        print(cells["residual_exact"] if residual else "0")
    else:
        report = ScanReport(title="regroup residual",
                            columns=("n", "k", "residual", "residual_exact"))
        report.add_row(n=args.n, k=args.k, **cells)
        _emit(report, args.format)
    return 0


def _cmd_realizable(args) -> int:
    classes = [parse_cycle_class(c) for c in (args.c1, args.c2, args.c3)]
    verdict = oracle.realizability(*classes, cap=args.cap)
    witness = ""
    if verdict.witness:
        witness = " ; ".join(oracle.perm_cycles_str(p) for p in verdict.witness)
    report = ScanReport(
        title="realizability",
        columns=("classes", "frobenius_positive", "realizable", "witness"))
    report.add_row(
        classes=" | ".join(format_parts(c.lengths) for c in classes),
        frobenius_positive=verdict.frobenius_positive,
        realizable=verdict.realizable,
        witness=witness)
    if args.format == "text":
        print(f"frobenius_positive: {verdict.frobenius_positive}")
        print(f"realizable: {verdict.realizable}")
        if witness:
            print(f"witness: {witness}")
    else:
        _emit(report, args.format)
    return 0


def _cmd_conjecture_scan(args) -> int:
    rows = oracle.conjecture_scan(args.n, cap=args.cap)
    report = ScanReport(
        title=f"3-derangement conjecture scan, n = {args.n}",
        columns=("classes", "frobenius_count", "brute_count",
                 "frobenius_positive", "realizable", "witness", "counterexample"))
    counterexamples = 0
    for row in rows:
        witness = ""
        if row.witness:
            witness = " ; ".join(oracle.perm_cycles_str(p) for p in row.witness)
        counterexamples += row.is_counterexample
        report.add_row(
            classes=" | ".join(format_parts(c.lengths) for c in row.classes),
            frobenius_count=row.frobenius_count,
            brute_count=row.brute_count,
            frobenius_positive=row.frobenius_positive,
            realizable=row.realizable,
            witness=witness,
            counterexample=row.is_counterexample)
    report.notes.append(f"{len(rows)} sign-compatible triples, "
                        f"{counterexamples} counterexamples")
    _emit(report, args.format)
    return 0


def _cmd_scan_limit2(args) -> int:
    report = asymptotics.scan_limit2(_parse_n_list(args.n), family=args.family or "ncycle")
    _emit(report, args.format)
    return 0


def _cmd_scan_semigauss(args) -> int:
    report = asymptotics.scan_semigauss(
        args.H, _parse_n_list(args.n), P=args.P,
        workers=args.threads, override_budget=args.override_budget)
    _emit(report, args.format)
    return 0


def _cmd_bounds(args) -> int:
    report = ScanReport(
        title=f"bound diagnostics, n = {args.n}",
        columns=("quantity", "value", "detail"))
    if args.c1:
        cls = parse_cycle_class(args.c1)
        b = asymptotics.bound_report(args.n, cls)
        report.add_row(quantity="centralizer", value=b.centralizer.centralizer,
                       detail=f"class {format_parts(cls.lengths)}")
        bound = (b.centralizer.bound_exact if b.centralizer.bound_exact is not None
                 else decimal_str(math.exp(b.centralizer.bound_log)))
        report.add_row(quantity="centralizer_bound", value=bound,
                       detail=f"m={b.centralizer.m}, k={b.centralizer.k}, "
                              f"holds={b.centralizer.ok}")
        if b.ls_exponent is not None:
            report.add_row(quantity="char_growth_exponent",
                           value=decimal_str(b.ls_exponent), detail="max ln|chi|/ln dim")
    report.add_row(quantity="hardy_ramanujan_ratio",
                   value=decimal_str(asymptotics.hr_ratio(args.n)),
                   detail="p(n) n / e^(2 sqrt(2n))")
    if args.n <= asymptotics.RT_BUDGET:
        min_dim, holds = asymptotics.mishchenko_floor(args.n)
        report.add_row(quantity="central_family_min_dim", value=min_dim,
                       detail=f"min dim >= (3/2)^n: {holds}")
    if args.H is not None and args.P is not None:
        logs = asymptotics.condition_b_centralizer_logs(args.n, args.H, args.P)
        report.add_row(quantity="log_c1", value=decimal_str(logs.log_c1),
                       detail=f"reference (H/2) sqrt(n) ln n = {decimal_str(logs.c1_reference)}")
        report.add_row(quantity="log_c3", value=decimal_str(logs.log_c3),
                       detail=f"sqrt(n) ln n = {decimal_str(logs.sqrt_n_log_n)}")
    _emit(report, args.format)
    return 0


def _cmd_rt(args) -> int:
    sums = asymptotics.rt_sums(args.n)
    report = ScanReport(title=f"tail sums, n = {args.n}", columns=("quantity", "value"))
    report.add_row(quantity="R", value=decimal_str(sums.r))
    report.add_row(quantity="T", value=decimal_str(sums.t))
    _emit(report, args.format)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="frobsum",
                     description="Exact character sums and realizability scans for S_n")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, func, **flags):
        p = sub.add_parser(name)
        p.set_defaults(func=func)
        for flag, spec in flags.items():
            p.add_argument(flag, **spec)
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.add_argument("--threads", type=int, default=1)
        return p

    add("partitions", _cmd_partitions,
        **{"--n": dict(type=int, required=True), "--family": dict(default=None)})
    chi = add("chi", _cmd_chi, **{"--shape": dict(required=True),
                                  "--n": dict(type=int, default=None)})
    chi.add_argument("--class", dest="cycle_class", required=True)
    add("dim", _cmd_dim, **{"--shape": dict(required=True)})
    add("ysum", _cmd_ysum,
        **{"--n": dict(type=int, required=True), "--c1": dict(required=True),
           "--c2": dict(required=True), "--c3": dict(required=True),
           "--family": dict(default=None)})
    add("count", _cmd_count,
        **{"--c1": dict(required=True), "--c2": dict(required=True),
           "--c3": dict(required=True)})
    add("regroup", _cmd_regroup,
        **{"--n": dict(type=int, required=True), "--k": dict(type=int, required=True),
           "--c1": dict(required=True), "--c2": dict(required=True),
           "--c3": dict(required=True)})
    add("realizable", _cmd_realizable,
        **{"--c1": dict(required=True), "--c2": dict(required=True),
           "--c3": dict(required=True), "--cap": dict(type=int, default=oracle.DEFAULT_CAP)})
    add("conjecture-scan", _cmd_conjecture_scan,
        **{"--n": dict(type=int, required=True),
           "--cap": dict(type=int, default=oracle.DEFAULT_CAP)})
    add("scan-limit2", _cmd_scan_limit2,
        **{"--n": dict(required=True), "--family": dict(default="ncycle")})
    add("scan-semigauss", _cmd_scan_semigauss,
        **{"--n": dict(required=True), "--H": dict(type=float, required=True),
           "--P": dict(type=float, default=0.1),
           "--override-budget": dict(action="store_true")})
    add("bounds", _cmd_bounds,
        **{"--n": dict(type=int, required=True), "--c1": dict(default=None),
           "--H": dict(type=float, default=None), "--P": dict(type=float, default=None)})
    add("rt", _cmd_rt, **{"--n": dict(type=int, required=True)})
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CLIUsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except BudgetError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except (PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
