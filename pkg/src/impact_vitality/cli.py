"""``iv`` command line tool.

Exit codes: 0 success, 1 usage error, 2 parse or file error, 3 domain
error (window too short, no citing publications, unknown researcher).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cohort as ca
from .core import WindowTooShortError, impact_vitality
from .ingest import (
    CitationTimeline,
    ParseError,
    Selection,
    build_cohort,
    parse_counts_file,
    parse_profiles_file,
    window_from_timeline,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3

UNDEFINED = "UNDEFINED"


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(result) -> str:
    return f"{result.iv:.6f}" if result.defined else UNDEFINED


def _fmt_float(x: float | None) -> str:
    return UNDEFINED if x is None else f"{x:.6f}"


def _json_value(result):
    return result.iv if result.defined else None


def _dump_json(obj, out):
    out.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def _write_csv(header, rows, out):
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(str(v) for v in row) + "\n")


def _write_text_table(header, rows, out):
    rows = [[str(v) for v in r] for r in rows]
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(header)]
    for r in [list(header)] + rows:
        out.write("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")


def _warn(messages):
    for m in messages:
        print(f"warning: {m}", file=sys.stderr)


def _load_counts(path):
    timelines, warnings = parse_counts_file(path)
    _warn(warnings)
    return timelines


def _timeline(timelines, rid) -> CitationTimeline:
    if rid not in timelines:
        raise DomainError(f"unknown researcher_id {rid!r}")
    return timelines[rid]


def _window_length(n):
    if n < 2:
        raise DomainError(f"window length must be at least 2, got {n}")
    return n


def cmd_compute(args, out) -> int:
    timelines = _load_counts(args.counts)
    t = _timeline(timelines, args.researcher)
    n = _window_length(args.window)
    window = window_from_timeline(t, args.year, n)
    result = impact_vitality(window)
    first_year = args.year - n + 1
    if args.format == "json":
        _dump_json(
            {
                "researcher_id": t.researcher_id,
                "year": args.year,
                "window": n,
                "first_year": first_year,
                "citing_publications": window.total,
                "iv": _json_value(result),
                "defined": result.defined,
            },
            out,
        )
    elif args.format == "csv":
        _write_csv(
            ["researcher_id", "year", "window", "first_year", "citing_publications", "iv"],
            [[t.researcher_id, args.year, n, first_year, window.total, _fmt(result)]],
            out,
        )
    else:
        out.write(
            f"{_fmt(result)}  researcher={t.researcher_id} year={args.year} "
            f"window={n} ({first_year}-{args.year}) citing_publications={window.total}\n"
        )
    if not result.defined:
        raise DomainError(
            f"no citing publications in window {first_year}-{args.year} "
            f"for {t.researcher_id}"
        )
    return EXIT_OK


def _spec_from_args(args):
    if args.mode == "phd":
        if args.window is not None:
            raise UsageError("--window only applies to --mode moving")
        return None
    if args.window is None:
        raise UsageError("--mode moving requires --window")
    _window_length(args.window)
    return ca.Moving(args.window)


def cmd_series(args, out) -> int:
    spec = _spec_from_args(args)
    timelines = _load_counts(args.counts)
    if args.profiles is None:
        if args.mode == "phd":
            raise UsageError("--mode phd requires --profiles")
        if args.y_from is None:
            raise UsageError("--mode moving without --profiles requires --from")
        series = {
            rid: ca.iv_series(t, spec, args.y_from, args.to)
            for rid, t in sorted(timelines.items())
        }
    else:
        profiles = parse_profiles_file(args.profiles)
        cohort, warnings = build_cohort(profiles, timelines)
        _warn(warnings)
        series = ca.cohort_series(cohort, spec, args.to, args.y_from, args.jobs)
        _warn(
            f"no year to evaluate for {rid!r} up to {args.to}"
            for rid, s in series.items()
            if s is None
        )

    rows = [
        (rid, year, s.spec.length_at(year), result)
        for rid, s in series.items()
        if s is not None
        for year, result in s
    ]
    if args.format == "json":
        _dump_json(
            [
                {
                    "researcher_id": rid,
                    "year": year,
                    "iv": _json_value(r),
                    "defined": r.defined,
                }
                for rid, year, _, r in rows
            ],
            out,
        )
    else:
        header = ["researcher_id", "year", "window", "iv"]
        body = [[rid, year, n, _fmt(r)] for rid, year, n, r in rows]
        (_write_csv if args.format == "csv" else _write_text_table)(header, body, out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    spec = _spec_from_args(args)
    timelines = _load_counts(args.counts)
    profiles = parse_profiles_file(args.profiles)
    if all(p.selected is Selection.UNKNOWN for p in profiles.values()):
        raise DomainError(f"no researcher in {args.profiles} has a selection label")
    cohort, warnings = build_cohort(profiles, timelines)
    _warn(warnings)
    table = ca.contingency_table(
        cohort,
        spec,
        args.to,
        threshold=args.threshold,
        epsilon=args.epsilon,
        y_from=args.y_from,
        jobs=args.jobs,
    )
    name = "IV_PhD" if spec is None else "IV"
    above = f"{name} >= {args.threshold:g} for all years"
    below = f"{name} < {args.threshold:g} for one or more years"
    if args.format == "json":
        _dump_json(
            {
                "mode": args.mode,
                "window": None if spec is None else spec.length,
                "to": args.to,
                "threshold": args.threshold,
                "epsilon": args.epsilon,
                "columns": [above, below],
                "cells": {
                    "Selected": [table.selected_all, table.selected_below],
                    "NotSelected": [table.not_selected_all, table.not_selected_below],
                },
                "excluded": {
                    "unknown_label": table.excluded_unknown_label,
                    "no_defined_years": table.excluded_no_defined_years,
                },
            },
            out,
        )
    elif args.format == "csv":
        _write_csv(
            ["cell", "count"],
            [
                ["selected_all_at_or_above", table.selected_all],
                ["selected_below_some_year", table.selected_below],
                ["not_selected_all_at_or_above", table.not_selected_all],
                ["not_selected_below_some_year", table.not_selected_below],
                ["excluded_unknown_label", table.excluded_unknown_label],
                ["excluded_no_defined_years", table.excluded_no_defined_years],
            ],
            out,
        )
    else:
        _write_text_table(
            ["", above, below],
            [
                ["Selected", table.selected_all, table.selected_below],
                ["NotSelected", table.not_selected_all, table.not_selected_below],
            ],
            out,
        )
        out.write(f"excluded (unknown label): {table.excluded_unknown_label}\n")
        out.write(f"excluded (no defined years): {table.excluded_no_defined_years}\n")
    return EXIT_OK


def cmd_perturb(args, out) -> int:
    timelines = _load_counts(args.counts)
    t = _timeline(timelines, args.researcher)
    spec = ca.Moving(_window_length(args.window))
    rows = ca.perturbation_report(t, spec, args.year, args.delta)
    if args.format == "json":
        _dump_json(
            [
                {
                    "year": r.year,
                    "iv_before": _json_value(r.iv_before),
                    "iv_after": _json_value(r.iv_after),
                    "delta_iv": r.difference,
                }
                for r in rows
            ],
            out,
        )
    else:
        header = ["year", "iv_before", "iv_after", "delta_iv"]
        body = [
            [r.year, _fmt(r.iv_before), _fmt(r.iv_after), _fmt_float(r.difference)]
            for r in rows
        ]
        (_write_csv if args.format == "csv" else _write_text_table)(header, body, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="iv", description="Impact Vitality citation-trend indicator.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--counts", required=True, metavar="PATH")
        p.add_argument("--format", choices=["text", "csv", "json"], default="text")
        return p

    p = add("compute", cmd_compute, "IV for one researcher and window")
    p.add_argument("--researcher", required=True, metavar="ID")
    p.add_argument("--year", required=True, type=int, metavar="Y1")
    p.add_argument("--window", required=True, type=int, metavar="N")

    for name, func, help in [
        ("series", cmd_series, "IV series per researcher"),
        ("table", cmd_table, "selection vs. vitality contingency table"),
    ]:
        p = add(name, func, help)
        p.add_argument("--profiles", required=name == "table", metavar="PATH")
        p.add_argument(
            "--mode",
            choices=["phd", "moving"],
            required=name == "series",
            default="phd" if name == "table" else None,
        )
        p.add_argument("--window", type=int, metavar="N")
        p.add_argument("--from", dest="y_from", type=int, metavar="Y")
        p.add_argument("--to", required=True, type=int, metavar="Y")
        p.add_argument("--jobs", type=int, default=1, metavar="J")
        if name == "table":
            p.add_argument("--threshold", type=float, default=ca.DEFAULT_THRESHOLD)
            p.add_argument("--epsilon", type=float, default=ca.DEFAULT_EPSILON)

    p = add("perturb", cmd_perturb, "IV sensitivity to one extra citing publication per year")
    p.add_argument("--researcher", required=True, metavar="ID")
    p.add_argument("--year", required=True, type=int, metavar="Y1")
    p.add_argument("--window", required=True, type=int, metavar="N")
    p.add_argument("--delta", type=int, default=1, metavar="K")
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"iv {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, OSError) as exc:
        print(f"iv: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, WindowTooShortError, ValueError) as exc:
        print(f"iv: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
