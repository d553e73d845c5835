"""Command-line driver.

Exit codes: 0 = holds/equality (or SKIPPED, with a warning), 1 = violation
found (first violating exponent printed), 2 = usage or parameter error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import render
from .partitions import DUAL, MAIN, Params
from .series import SKIPPED, VIOLATED, Verdict, series_sub, expand_product
from .partitions import CODOMAIN, DOMAIN, product_spec
from .verify import (
    injection_table,
    lecture_hall_check,
    search_exceptions,
    sweep_ranges,
    verify_bg,
    verify_dual,
    verify_gen,
    verify_main,
    verify_refinement1,
    verify_refinement2,
    verify_refinement3,
    LECTURE_HALL_VARIANTS,
)

DEFAULT_MAX_DEGREE = 200
DEFAULT_MAX_NORM = 80


class UsageError(Exception):
    pass


def _max_degree() -> int:
    raw = os.environ.get("QINJ_MAX_DEGREE")
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"QINJ_MAX_DEGREE must be an integer, got {raw!r}") from exc


def _max_norm() -> int:
    raw = os.environ.get("QINJ_MAX_NORM")
    if raw is None:
        return DEFAULT_MAX_NORM
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"QINJ_MAX_NORM must be an integer, got {raw!r}") from exc


def _check_degree(degree: int) -> int:
    cap = _max_degree()
    if degree < 0:
        raise UsageError("degree must be nonnegative")
    if degree > cap:
        raise UsageError(f"degree {degree} exceeds cap {cap} (override with QINJ_MAX_DEGREE)")
    return degree


def _check_norm(x: int) -> int:
    cap = _max_norm()
    if x < 0:
        raise UsageError("norm must be nonnegative")
    if x > cap:
        raise UsageError(f"norm {x} exceeds cap {cap} (override with QINJ_MAX_NORM)")
    return x


def _parse_params(text: str) -> Params:
    fields = text.split(",")
    if len(fields) != 6:
        raise UsageError("--params needs six comma-separated integers K,L,m,n,y,z")
    try:
        k, l, m, n, y, z = (int(f) for f in fields)
        return Params(k, l, m, n, y, z)
    except ValueError as exc:
        raise UsageError(f"bad --params {text!r}: {exc}") from exc


def _parse_range(text: str) -> list[int]:
    """Range syntax: "lo:hi" (inclusive) or comma list "a,b,c"."""
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(f) for f in text.split(",") if f != ""]
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}: {exc}") from exc
    return values


def _parse_length(text: str) -> int | None:
    if text in ("inf", "infinity"):
        return None
    try:
        return int(text)
    except ValueError as exc:
        raise UsageError(f"--L must be an integer or 'inf', got {text!r}") from exc


def _emit_verdict(verdict: Verdict, fmt: str) -> int:
    print(render.render_verdict(verdict, fmt))
    if verdict.status == VIOLATED:
        return 1
    if verdict.status == SKIPPED and fmt != "json":
        print("warning: degree bound exhausted without finding the expected violation",
              file=sys.stderr)
    return 0


def _cmd_expand(args: argparse.Namespace) -> int:
    params = _parse_params(args.params)
    params.validate(MAIN)
    degree = _check_degree(args.degree)
    left = expand_product(product_spec(CODOMAIN, MAIN, params), degree)
    right = expand_product(product_spec(DOMAIN, MAIN, params), degree)
    series = {"left": left, "right": right, "diff": series_sub(left, right)}[args.side]
    print(render.render_series(series, args.format))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    fmt = args.format
    if args.which == "main":
        params = _parse_params(args.params)
        verdict = verify_main(params, _check_degree(args.degree), args.cross_check_limit)
    elif args.which == "dual":
        params = _parse_params(args.params)
        verdict = verify_dual(params, _check_degree(args.degree), args.cross_check_limit)
    elif args.which == "gen":
        params = _parse_params(args.params)
        params = Params(params.K, params.L, params.m, params.n, params.y, params.z,
                        S=args.s, T=args.t)
        verdict = verify_gen(params, _check_degree(args.degree))
    elif args.which == "bg":
        verdict = verify_bg(_parse_length(args.L), args.m, args.r,
                            _check_degree(args.max_degree))
    elif args.which == "refine1":
        verdict = verify_refinement1(args.n, args.y, args.K, args.L, args.f,
                                     _check_degree(args.degree))
    elif args.which == "refine2":
        verdict = verify_refinement2(args.n, args.y, args.K, args.L, args.f,
                                     _check_degree(args.degree))
    elif args.which == "refine3":
        verdict = verify_refinement3(args.L, args.m, args.r, args.f,
                                     _check_degree(args.degree))
    elif args.which == "lecture-hall":
        verdict = lecture_hall_check(args.variant, args.size, args.xexp, args.yexp,
                                     _check_degree(args.degree))
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown verifier {args.which!r}")
    return _emit_verdict(verdict, fmt)


def _cmd_table(args: argparse.Namespace) -> int:
    params = _parse_params(args.params)
    records = injection_table(params, _check_norm(args.norm), args.mode)
    print(render.render_table(records, params, args.format))
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    tuples = sweep_ranges(
        _parse_range(args.K), _parse_range(args.L), _parse_range(args.m),
        _parse_range(args.n), _parse_range(args.y), _parse_range(args.z),
        coprime_only=args.coprime_only)
    if not tuples:
        raise UsageError("empty parameter sweep")
    report = search_exceptions(tuples, _check_degree(args.degree),
                               allow_gcd=args.allow_gcd,
                               allow_k_lt_l=args.allow_klt_swap)
    print(render.render_search(report, args.format))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qinj",
        description="Exact q-series dominance and colored-partition injection checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="expand one side (or the difference) of the product inequality")
    p_expand.add_argument("--params", required=True, help="K,L,m,n,y,z")
    p_expand.add_argument("--side", choices=("left", "right", "diff"), default="left")
    p_expand.add_argument("--degree", type=int, required=True)
    p_expand.add_argument("--format", choices=render.FORMATS, default="plain")
    p_expand.set_defaults(func=_cmd_expand)

    p_verify = sub.add_parser("verify", help="run a theorem verifier")
    vsub = p_verify.add_subparsers(dest="which", required=True)

    for name in ("main", "dual"):
        p = vsub.add_parser(name)
        p.add_argument("--params", required=True, help="K,L,m,n,y,z")
        p.add_argument("--degree", type=int, required=True)
        p.add_argument("--cross-check-limit", type=int, default=None,
                       help="norm bound for the enumeration cross-check")
        p.add_argument("--format", choices=("plain", "json"), default="plain")
        p.set_defaults(func=_cmd_verify)

    p = vsub.add_parser("gen")
    p.add_argument("--params", required=True, help="K,L,m,n,y,z")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=_cmd_verify)

    p = vsub.add_parser("bg")
    p.add_argument("--L", required=True, help="factor length, or 'inf'")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=_cmd_verify)

    for name in ("refine1", "refine2"):
        p = vsub.add_parser(name)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--y", type=int, required=True)
        p.add_argument("--K", type=int, required=True)
        p.add_argument("--L", type=int, required=True)
        p.add_argument("--f", type=int, required=True)
        p.add_argument("--degree", type=int, required=True)
        p.add_argument("--format", choices=("plain", "json"), default="plain")
        p.set_defaults(func=_cmd_verify)

    p = vsub.add_parser("refine3")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=_cmd_verify)

    p = vsub.add_parser("lecture-hall")
    p.add_argument("--variant", choices=LECTURE_HALL_VARIANTS, required=True)
    p.add_argument("--size", type=int, required=True,
                   help="number of chain entries for lhp, half-length L otherwise")
    p.add_argument("--xexp", type=int, required=True)
    p.add_argument("--yexp", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=_cmd_verify)

    p_table = sub.add_parser("table", help="emit the injection table for one norm")
    p_table.add_argument("--params", required=True, help="K,L,m,n,y,z")
    p_table.add_argument("--norm", type=int, required=True)
    p_table.add_argument("--mode", choices=(MAIN, DUAL), default=MAIN)
    p_table.add_argument("--format", choices=render.FORMATS, default="plain")
    p_table.set_defaults(func=_cmd_table)

    p_search = sub.add_parser("search", help="sweep parameter tuples for dominance exceptions")
    for flag in ("K", "L", "m", "n", "y", "z"):
        p_search.add_argument(f"--{flag}", required=True,
                              help="range 'lo:hi' or comma list")
    p_search.add_argument("--degree", type=int, required=True)
    p_search.add_argument("--allow-gcd", action="store_true",
                          help="permit tuples with gcd(n, y) > 1")
    p_search.add_argument("--allow-klt-swap", action="store_true",
                          help="permit tuples with K < L")
    p_search.add_argument("--coprime-only", action="store_true",
                          help="drop tuples with gcd(n, y) > 1 from the grid")
    p_search.add_argument("--format", choices=("csv", "json"), default="csv")
    p_search.set_defaults(func=_cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
