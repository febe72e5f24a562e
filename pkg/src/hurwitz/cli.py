"""Command-line frontend.

Exit codes: 0 on success, 1 when a verification produced a false
verdict, 2 on usage errors (including configured-limit violations).
Rationals are serialized as "p/q" strings so no consumer ever rounds.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import chambers, engine, toda, walks
from .characters import DEFAULT_MAX_TABLE_D, character_table
from .partitions import Partition, check_partition, partitions_of
from .regular_functions import RegularFunction

DEFAULT_CACHE_DIR = ".hurwitz-cache"
CACHE_DIR_ENV = "HURWITZ_CACHE_DIR"


class UsageError(Exception):
    pass


def parse_partition(text: str, flag: str) -> Partition:
    try:
        parts = tuple(int(x) for x in text.split(",") if x.strip() != "")
        return check_partition(tuple(sorted(parts, reverse=True)))
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def parse_pair(text: str, flag: str) -> tuple[Partition, Partition]:
    if "/" not in text:
        raise UsageError(f"{flag}: expected 'alpha/beta', e.g. 3,1/2,2")
    left, right = text.split("/", 1)
    return parse_partition(left, flag), parse_partition(right, flag)


def frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz",
        description="Exact mixed double Hurwitz numbers and their identities.",
        allow_abbrev=False,
    )
    parser.add_argument(
        "--cache-dir",
        default=os.environ.get(CACHE_DIR_ENV, DEFAULT_CACHE_DIR),
        help="character table cache directory",
    )
    parser.add_argument(
        "--format",
        choices=("json", "csv", "plain"),
        default="json",
        help="output format where applicable",
    )
    parser.add_argument("--seed", type=int, default=0, help="sampling seed")
    parser.add_argument(
        "--max-table-d", type=int, default=DEFAULT_MAX_TABLE_D,
        help="largest d for full character tables",
    )
    parser.add_argument(
        "--max-walk-d", type=int, default=walks.MAX_WALK_D,
        help="largest d for group algebra walk enumeration",
    )
    parser.add_argument(
        "--max-series-d", type=int, default=engine.DEFAULT_MAX_SERIES_D,
        help="largest d for series-logarithm computations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="one (W, H) query")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--method", choices=("char", "series", "oracle"), default="char")

    p = sub.add_parser("table", help="CSV of W and H over all pairs at size d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)

    p = sub.add_parser("verify", help="run one verification")
    vsub = p.add_subparsers(dest="verification", required=True)

    v = vsub.add_parser("toda", help="first bilinear Toda equation")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--dz", type=int, required=True)
    v.add_argument("--dt", type=int, required=True)
    v.add_argument("--du", type=int, required=True)

    v = vsub.add_parser("jm", help="Jucys-Murphy level sums")
    v.add_argument("--d", type=int, required=True)

    v = vsub.add_parser("central", help="central character identity")
    v.add_argument("--d", type=int, required=True)
    v.add_argument("--f", required=True, help='regular function, e.g. "H2+SIZE"')

    v = vsub.add_parser("expformula", help="exponential formula round trip")
    v.add_argument("--d", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--l", type=int, required=True)

    p = sub.add_parser("fit", help="chamber polynomial interpolation")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--base", required=True, help="base point alpha/beta")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--degree-cap", type=int, default=12)

    p = sub.add_parser("oracle", help="brute-force walk count")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    return parser


def _check_limit(value: int, cap: int, what: str, flag: str) -> None:
    if value > cap:
        raise UsageError(f"{flag}: {what} is capped at {cap}, got {value}")


def _warm_table_cache(args) -> None:
    if args.d <= args.max_table_d:
        character_table(args.d, cache_dir=args.cache_dir, max_d=args.max_table_d)


def _cmd_compute(args, out) -> int:
    alpha = parse_partition(args.alpha, "--alpha")
    beta = parse_partition(args.beta, "--beta")
    if sum(alpha) != args.d or sum(beta) != args.d:
        raise UsageError("--d: does not match |alpha| or |beta|")
    _check_limit(args.d, args.max_series_d, "d", "--d")
    _warm_table_cache(args)
    if args.method == "oracle":
        _check_limit(args.d, args.max_walk_d, "d for oracle", "--d")
        _check_limit(args.k + args.l, walks.MAX_STEPS, "k+l for oracle", "--k/--l")
    value = engine.hurwitz_value(args.k, args.l, alpha, beta, method=args.method)
    if args.format == "plain":
        obj = value.to_json_obj()
        for key in ("d", "k", "l", "alpha", "beta", "W", "H", "on_wall", "method"):
            print(f"{key}: {obj[key]}", file=out)
    else:
        print(json.dumps(value.to_json_obj(), sort_keys=True), file=out)
    return 0


def _cmd_table(args, out) -> int:
    _check_limit(args.d, args.max_series_d, "d", "--d")
    _warm_table_cache(args)
    orders = (args.d, args.k, args.l)
    print("alpha,beta,W,H,on_wall", file=out)
    for alpha in partitions_of(args.d):
        for beta in partitions_of(args.d):
            w = engine.w_char(args.k, args.l, alpha, beta)
            h = engine.h_connected(args.k, args.l, alpha, beta, orders=orders)
            wall = engine.is_on_wall(alpha, beta)
            a = " ".join(map(str, alpha))
            b = " ".join(map(str, beta))
            print(f"{a},{b},{w},{frac_str(h)},{wall}", file=out)
    return 0


def _cmd_verify_toda(args, out) -> int:
    report = toda.toda_first_equation_check(args.n, (args.dz, args.dt, args.du))
    if args.format == "json":
        obj = {
            "n": report.n,
            "orders": list(report.orders),
            "gamma_matches_closed_form": report.gamma_matches_closed_form,
            "all_equal": report.all_equal,
            "entries": [
                {
                    "z": key[0], "t": key[1], "u": key[2],
                    "A": list(key[3]), "B": list(key[4]),
                    "lhs": frac_str(lhs), "rhs": frac_str(rhs),
                }
                for key, lhs, rhs in report.entries
            ],
        }
        print(json.dumps(obj, sort_keys=True), file=out)
    else:
        for key, lhs, rhs in report.entries:
            mark = "ok" if lhs == rhs else "MISMATCH"
            print(f"z^{key[0]} t^{key[1]} u^{key[2]} A={list(key[3])} "
                  f"B={list(key[4])}: {frac_str(lhs)} vs {frac_str(rhs)} {mark}",
                  file=out)
        print(f"gamma matches closed form: {report.gamma_matches_closed_form}",
              file=out)
        print(f"verdict: {'PASS' if report.all_equal else 'FAIL'}", file=out)
    return 0 if report.all_equal else 1


def _cmd_verify_jm(args, out) -> int:
    _check_limit(args.d, args.max_walk_d, "d", "--d")
    ok = True
    for r in range(args.d):
        good = walks.verify_jm_levels(args.d, r, max_d=args.max_walk_d)
        print(f"e_{r} on JM alphabet vs level {r} class sums: "
              f"{'ok' if good else 'MISMATCH'}", file=out)
        ok = ok and good
    print(f"verdict: {'PASS' if ok else 'FAIL'}", file=out)
    return 0 if ok else 1


def _cmd_verify_central(args, out) -> int:
    _check_limit(args.d, walks.MAX_CENTRAL_D, "d", "--d")
    try:
        f = RegularFunction.parse(args.f)
    except ValueError as exc:
        raise UsageError(f"--f: {exc}") from exc
    ok = walks.verify_central_character(args.d, f)
    print(f"verdict: {'PASS' if ok else 'FAIL'}", file=out)
    return 0 if ok else 1


def _cmd_verify_expformula(args, out) -> int:
    _check_limit(args.d, args.max_series_d, "d", "--d")
    orders = (args.d, args.k, args.l)
    ok = True
    for alpha in partitions_of(args.d):
        for beta in partitions_of(args.d):
            w = engine.w_char(args.k, args.l, alpha, beta)
            rebuilt = engine.reconstruct_w_from_h(
                args.k, args.l, alpha, beta, orders=orders
            )
            if w != rebuilt:
                ok = False
                print(f"mismatch at alpha={list(alpha)} beta={list(beta)}: "
                      f"{w} vs {rebuilt}", file=out)
    print(f"verdict: {'PASS' if ok else 'FAIL'}", file=out)
    return 0 if ok else 1


def _cmd_fit(args, out) -> int:
    alpha, beta = parse_pair(args.base, "--base")
    if len(alpha) != args.m or len(beta) != args.n:
        raise UsageError("--base: lengths do not match --m/--n")
    try:
        base = chambers.ChamberPoint.at(alpha, beta)
        points = chambers.sample_chamber(base, args.points, args.bound, seed=args.seed)
        fit = chambers.fit_chamber_polynomial(
            args.k, args.l, points, degree_cap=args.degree_cap
        )
    except (ValueError, chambers.ChamberExhaustedError) as exc:
        raise UsageError(f"--base/--points/--bound: {exc}") from exc
    except chambers.FitError as exc:
        print(str(exc), file=out)
        for line in exc.diagnostics:
            print(line, file=out)
        return 1
    obj = fit.to_json_obj()
    obj["k"], obj["l"] = args.k, args.l
    print(json.dumps(obj, sort_keys=True), file=out)
    return 0


def _cmd_oracle(args, out) -> int:
    alpha = parse_partition(args.alpha, "--alpha")
    beta = parse_partition(args.beta, "--beta")
    if sum(alpha) != args.d or sum(beta) != args.d:
        raise UsageError("--d: does not match |alpha| or |beta|")
    _check_limit(args.d, args.max_walk_d, "d", "--d")
    _check_limit(args.k + args.l, walks.MAX_STEPS, "k+l", "--k/--l")
    count = walks.count_walks(
        args.k, args.l, alpha, beta, max_d=args.max_walk_d
    )
    if args.format == "json":
        print(json.dumps({"W": str(count)}), file=out)
    else:
        print(count, file=out)
    return 0


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute":
            return _cmd_compute(args, out)
        if args.command == "table":
            return _cmd_table(args, out)
        if args.command == "verify":
            handler = {
                "toda": _cmd_verify_toda,
                "jm": _cmd_verify_jm,
                "central": _cmd_verify_central,
                "expformula": _cmd_verify_expformula,
            }[args.verification]
            return handler(args, out)
        if args.command == "fit":
            return _cmd_fit(args, out)
        if args.command == "oracle":
            return _cmd_oracle(args, out)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())
