"""Command-line interface.

Usage::

    fmzv zeta 3 1                         # 11/6
    fmzv zeta 4 2,1 --weights -1,1
    fmzv shuffle 2 2 --as compositions    # 2*(2,2) + 4*(3,1)
    fmzv shuffle 01 011 --input words --as words
    fmzv r 10 2 3 --method series
    fmzv verify reciprocity --grid N=10,weight=4 --json
    fmzv gap 2 2 --n 10,20,40 --M 500

Exit codes:
    0: every checked identity holds (or the command just evaluated something)
    1: at least one nonzero residual, or a gap sequence that fails to decrease
    2: usage or parse error
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional, Sequence

from .identities import ORIENTATIONS, asymptotic_gap, r_direct, r_recurrence, r_shuffle
from .identities import r_weighted_direct, r_weighted_recurrence
from .rational import format_rational, parse_rationals
from .series import r_via_series
from .verify import SELECTORS, VerificationGrid, Summary, describe, sweep
from .words import (
    composition_to_word,
    format_composition,
    parse_composition,
    parse_word,
    shuffle_recursive,
    word_to_composition,
)
from .zeta import WeightedComposition, values

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

R_METHODS = {
    "direct": r_direct,
    "recurrence": r_recurrence,
    "shuffle": r_shuffle,
    "series": r_via_series,
}

CSV_FIELDS = [
    "N", "j", "a", "b", "sigma", "tau", "check", "k", "first_mismatch",
    "lhs", "rhs", "residual", "route_residual", "ok",
]


WEIGHT_OPTIONS = ("--weights", "--sigma", "--tau")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fmzv", description="Finite multiple zeta values and their reciprocity relations.")
    parser.add_argument("--seed", help="accepted and ignored; every computation is deterministic")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("zeta", help="evaluate zeta_N(a)")
    p.add_argument("N", type=_nonneg_int)
    p.add_argument("a", help="composition, e.g. 2,1")
    p.add_argument("--weights", help="one nonzero rational weight per part, e.g. -1,1/2")
    p.add_argument("--table", action="store_true", help="print zeta_0 .. zeta_N")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("shuffle", help="shuffle product of two compositions or words")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--input", choices=("compositions", "words"), default="compositions")
    p.add_argument("--as", dest="output", choices=("compositions", "words"), default="compositions")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("r", help="evaluate the cross sum R_N(a; b)")
    p.add_argument("N", type=_nonneg_int)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--method", choices=tuple(R_METHODS), default="direct")
    p.add_argument("--sigma", help="weights for a (weighted R_N; direct or recurrence only)")
    p.add_argument("--tau", help="weights for b")
    p.add_argument("--orientation", choices=ORIENTATIONS, default="derived")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="sweep an identity over a grid")
    p.add_argument("selector", choices=SELECTORS)
    p.add_argument("--grid", required=True, help="e.g. N=10,weight=4,depth=3,pool=-1:1:2:1/2")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.add_argument("--failures-only", action="store_true", help="human output: print failing cases only")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = sub.add_parser("gap", help="distance of the split cross sums from 2 zeta(a) zeta(b)")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--n", required=True, help="comma-separated n values")
    p.add_argument("--M", type=int, required=True, help="truncation standing in for infinity")
    p.add_argument("--json", action="store_true")
    return parser


def _emit(out, args, human: str, payload) -> None:
    if args.json:
        json.dump(payload, out)
        out.write("\n")
    else:
        out.write(human + "\n")


def _cmd_zeta(args, out) -> int:
    a = parse_composition(args.a)
    weights = None
    if args.weights is not None:
        weights = WeightedComposition(a, parse_rationals(args.weights)).weights
    table = values(a, weights, args.N)[: args.N + 1]
    if args.table:
        strs = [format_rational(v) for v in table]
        _emit(out, args, "\n".join(strs), strs)
    else:
        s = format_rational(table[args.N])
        _emit(out, args, s, {"N": args.N, "a": format_composition(a), "value": s})
    return EXIT_OK


def _cmd_shuffle(args, out) -> int:
    if args.input == "words":
        u, v = parse_word(args.u), parse_word(args.v)
    else:
        u = composition_to_word(parse_composition(args.u))
        v = composition_to_word(parse_composition(args.v))
    poly = shuffle_recursive(u, v)
    if args.output == "words":
        human = str(poly)
        payload = [{"coefficient": format_rational(q), "word": w} for w, q in poly.items()]
    else:
        terms = sorted(
            ((q, word_to_composition(w)) for w, q in poly.items()),
            key=lambda t: (sum(t[1]), len(t[1]), t[1]),
        )
        human = " + ".join(
            f"{q.numerator if q.denominator == 1 else format_rational(q)}*{format_composition(c)}"
            for q, c in terms
        )
        payload = [{"coefficient": format_rational(q), "composition": list(c)} for q, c in terms]
    _emit(out, args, human, payload)
    return EXIT_OK


def _cmd_r(args, out) -> int:
    a, b = parse_composition(args.a), parse_composition(args.b)
    if args.sigma is not None or args.tau is not None:
        sigma = parse_rationals(args.sigma) if args.sigma else (1,) * len(a)
        tau = parse_rationals(args.tau) if args.tau else (1,) * len(b)
        aw, bw = WeightedComposition(a, sigma), WeightedComposition(b, tau)
        if args.method == "direct":
            value = r_weighted_direct(args.N, aw, bw)
        elif args.method == "recurrence":
            value = r_weighted_recurrence(args.N, aw, bw, args.orientation)
        else:
            raise UsageError("weighted R_N supports --method direct or recurrence only")
    else:
        value = R_METHODS[args.method](args.N, a, b)
    s = format_rational(value)
    _emit(out, args, s, {"N": args.N, "a": format_composition(a), "b": format_composition(b),
                         "method": args.method, "value": s})
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    grid = VerificationGrid.parse(args.selector, args.grid)
    summary = Summary()
    if args.csv:
        writer = csv.DictWriter(out, fieldnames=CSV_FIELDS, restval="", extrasaction="ignore")
        writer.writeheader()
    records = []
    for report in sweep(grid, jobs=args.jobs):
        summary.total += 1
        if not report.ok:
            summary.failed += 1
        if args.json:
            records.append(report.to_json())
        elif args.csv:
            row = report.to_json()
            for key in ("sigma", "tau"):
                if key in row:
                    row[key] = ",".join(row[key])
            writer.writerow(row)
        elif not args.failures_only or not report.ok:
            out.write(describe(report) + "\n")
    if args.json:
        json.dump({"grid": grid.to_json(), "records": records, "summary": summary.to_json()}, out)
        out.write("\n")
    elif not args.csv:
        verdict = "all verified" if summary.ok else f"{summary.failed} FAILED"
        out.write(f"{args.selector}: {summary.total} cases, {verdict}\n")
    return EXIT_OK if summary.ok else EXIT_FAIL


def _cmd_gap(args, out) -> int:
    a, b = parse_composition(args.a), parse_composition(args.b)
    try:
        ns = [int(t) for t in args.n.split(",")]
    except ValueError as exc:
        raise UsageError(f"--n must be comma-separated integers: {args.n!r}") from exc
    gaps = [asymptotic_gap(n, a, b, args.M) for n in ns]
    decreasing = all(g1 > g2 for g1, g2 in zip(gaps, gaps[1:]))
    if args.json:
        payload = {
            "a": format_composition(a),
            "b": format_composition(b),
            "M": args.M,
            "gaps": [{"n": n, "gap": format_rational(g), "approx": float(g)} for n, g in zip(ns, gaps)],
            "strictly_decreasing": decreasing,
        }
        json.dump(payload, out)
        out.write("\n")
    else:
        for n, g in zip(ns, gaps):
            out.write(f"n={n} gap~{float(g):.6e}\n")
        out.write(f"strictly decreasing: {'yes' if decreasing else 'no'}\n")
    return EXIT_OK if decreasing else EXIT_FAIL


COMMANDS = {
    "zeta": _cmd_zeta,
    "shuffle": _cmd_shuffle,
    "r": _cmd_r,
    "verify": _cmd_verify,
    "gap": _cmd_gap,
}


def _glue_weight_options(argv: Sequence[str]) -> list[str]:
    # "--weights -1,1" would otherwise be read as an unknown option "-1,1"
    out, it = [], iter(argv)
    for tok in it:
        if tok in WEIGHT_OPTIONS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_weight_options(argv))
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as exc:
        print(f"fmzv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
