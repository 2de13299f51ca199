"""Command-line entry point.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 bad
configuration, 3 a resource bound was exceeded.
"""
from __future__ import annotations

import argparse
import sys
import time

from . import io as sio
from .cyclotomic import coordinate_signs, u_table
from .harness import (
    EXPLORATION_ALIASES,
    EXPLORATIONS,
    SUITE_ALIASES,
    SUITES,
    RunConfig,
    run_exploration,
    run_suite,
)
from .partitions import BRUTE_FORCE_CAP, BoundExceeded
from .sets import SpecError, parse_spec
from .signs import WindowTooShort, detect_period, sign_sequence
from .sums import s_direct_table, s_recurrence

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_BOUND = 0, 1, 2, 3
TABLE_LIMIT = 5000


class ConfigError(ValueError):
    pass


def int_range(text: str) -> list[int]:
    """``"5"`` -> [5]; ``"2..6"`` -> [2, 3, 4, 5, 6]; ``"0,2,3"`` -> [0, 2, 3]."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, a list or lo..hi: {text!r}") from None


def pairs_arg(text: str) -> list[tuple[int, int]]:
    try:
        return [tuple(int(v) for v in p.split(",")) for p in text.split(";") if p]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b;c,d': {text!r}") from None


def _emit(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args) -> dict:
    skip = {"func", "out", "no_timing"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _spec(args):
    if not args.set:
        raise ConfigError("--set is required")
    return parse_spec(args.set)


def _n(args, default):
    N = default if args.n is None else args.n
    if N < 0:
        raise ConfigError("--n must be non-negative")
    if N > TABLE_LIMIT:
        raise BoundExceeded(f"--n {N} exceeds the table limit {TABLE_LIMIT}")
    return N


def _kmax(args, default):
    return default if args.k is None else max(args.k)


def _finish(args, kind, payload, t0):
    wall = None if args.no_timing else time.perf_counter() - t0
    _emit(args, sio.envelope(kind, _config(args), payload, wall))


def cmd_poly(args) -> int:
    t0 = time.perf_counter()
    spec, N = _spec(args), _n(args, 10)
    table = sio.load_or_build(spec, N, sio.cache_dir(args.cache_dir))
    if args.format == "csv":
        _emit(args, sio.table_to_csv(table))
    else:
        _finish(args, "poly", sio.table_payload(table), t0)
    return EXIT_OK


def cmd_sums(args) -> int:
    t0 = time.perf_counter()
    spec, N, K = _spec(args), _n(args, 500), _kmax(args, 6)
    table = sio.load_or_build(spec, N, sio.cache_dir(args.cache_dir))
    direct = s_direct_table(table, K)
    rec = s_recurrence(spec, K, N, table)
    mismatches = [[k, n] for k in range(K + 1) for n in range(N + 1) if direct[k, n] != rec[k, n]]
    if args.format == "csv":
        _emit(args, sio.sums_to_csv(direct))
    else:
        payload = sio.sums_payload(direct)
        payload["methods_agree"] = not mismatches
        payload["mismatches"] = mismatches[:10]
        _finish(args, "sums", payload, t0)
    if mismatches:
        print(f"direct and recurrence disagree at {len(mismatches)} entries", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_signs(args) -> int:
    t0 = time.perf_counter()
    spec, N, K = _spec(args), _n(args, 500), _kmax(args, 6)
    sums = s_direct_table(sio.load_or_build(spec, N, sio.cache_dir(args.cache_dir)), K)
    payload = {"spec": str(spec), "N": N, "signs": {str(k): str(sign_sequence(sums, k)) for k in range(K + 1)}}
    _finish(args, "signs", payload, t0)
    return EXIT_OK


def cmd_period(args) -> int:
    t0 = time.perf_counter()
    spec, N, K = _spec(args), _n(args, 500), _kmax(args, 6)
    sums = s_direct_table(sio.load_or_build(spec, N, sio.cache_dir(args.cache_dir)), K)
    reports = []
    for k in range(K + 1):
        r = detect_period(sign_sequence(sums, k), args.max_preperiod, args.max_period)
        reports.append({"k": k, "report": None if r is None else r.to_dict()})
    _finish(args, "period", {"spec": str(spec), "N": N, "reports": reports}, t0)
    return EXIT_OK


def cmd_cyclo(args) -> int:
    t0 = time.perf_counter()
    spec, N, K = _spec(args), _n(args, 200), _kmax(args, 0)
    ds = args.d or [2, 3, 4, 6]
    table = sio.load_or_build(spec, N, sio.cache_dir(args.cache_dir))
    if args.format == "csv":
        if len(ds) != 1:
            raise ConfigError("csv output takes exactly one --d")
        _emit(args, sio.u_table_to_csv(u_table(spec, K, ds[0], N, table)))
        return EXIT_OK
    out = []
    for d in ds:
        values = u_table(spec, K, d, N, table)
        periods = []
        for seq in coordinate_signs(values, str(spec), K):
            try:
                r = detect_period(seq, args.max_preperiod, args.max_period)
            except WindowTooShort:
                r = None
            periods.append({"coordinate": seq.label, "report": None if r is None else r.to_dict()})
        out.append({"d": d, "k": K, "values": [[str(c) for c in v.coeffs] for v in values],
                    "periods": periods})
    _finish(args, "cyclo", {"spec": str(spec), "N": N, "tables": out}, t0)
    return EXIT_OK


def _run_config(args) -> RunConfig:
    return RunConfig(
        specs=[args.set] if args.set else None,
        K=None if args.k is None else max(args.k),
        N=None if args.n is None else _n(args, 0),
        d=args.d,
        pairs=getattr(args, "pairs", None),
        window=None if getattr(args, "window", "auto") == "auto" else int(args.window),
        max_preperiod=args.max_preperiod,
        max_period=args.max_period,
        oracle_cap=args.oracle_cap,
        cache_dir=sio.cache_dir(args.cache_dir),
        ks=getattr(args, "k", None),
        ms=getattr(args, "m", None),
    )


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    cfg = _run_config(args)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(name, cfg) for name in names]
    if args.format == "csv":
        rows = ["suite,check,passed"]
        rows += [f"{r.suite},\"{c.name}\",{int(c.passed)}" for r in reports for c in r.checks]
        _emit(args, "\n".join(rows) + "\n")
    else:
        payload = {"suites": [r.to_dict() for r in reports], "passed": all(r.passed for r in reports)}
        _finish(args, "verify", payload, t0)
    for r in reports:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.suite} ({len(r.checks)} checks)", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_explore(args) -> int:
    t0 = time.perf_counter()
    name = args.conj or args.prob or args.name
    if not name:
        raise ConfigError("one of --conj, --prob or --name is required")
    cfg = _run_config(args)
    _finish(args, "explore", run_exploration(name, cfg), t0)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--set", help="set description, e.g. 'explicit:1,2,6' or 'scaled(odd;p=j)'")
    common.add_argument("--n", type=int, help="largest n")
    common.add_argument("--k", type=int_range, help="k, a list, or a range lo..hi (max is used as K)")
    common.add_argument("--d", type=int_range, help="root-of-unity orders, e.g. 2,3,4,6")
    common.add_argument("--format", choices=("csv", "json"), default="json")
    common.add_argument("--cache-dir", help=f"table cache directory (default ${sio.CACHE_ENV})")
    common.add_argument("--max-preperiod", type=int)
    common.add_argument("--max-period", type=int)
    common.add_argument("--oracle-cap", type=int, default=BRUTE_FORCE_CAP)
    common.add_argument("--out", help="write to this file instead of stdout")
    common.add_argument("--no-timing", action="store_true", help="omit the wall-time field")

    p = argparse.ArgumentParser(prog="signpart", description="Signed weighted sums of A-partitions.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, func, help_ in [
        ("poly", cmd_poly, "partition polynomials f_{A,n}"),
        ("sums", cmd_sums, "S_{A,k}(n) by both methods, with an equality check"),
        ("signs", cmd_signs, "sign sequences of S_{A,k}"),
        ("period", cmd_period, "eventual sign periods"),
        ("cyclo", cmd_cyclo, "values at roots of unity in the power basis"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)

    sp = sub.add_parser("verify", parents=[common], help="run verification suites")
    sp.add_argument("--suite", default="all", choices=["all", *SUITES, *SUITE_ALIASES])
    sp.add_argument("--pairs", type=pairs_arg, help="two-element sets, e.g. '2,3;3,5'")
    sp.add_argument("--window", default="auto", help="sign window for two-element sets (auto = 40ab)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("explore", parents=[common], help="evidence scans for open questions")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--conj", choices=["4.1", "4.3", "4.4"])
    g.add_argument("--prob", choices=["4.2", "4.5", "4.6"])
    g.add_argument("--name", choices=list(EXPLORATIONS))
    sp.add_argument("--m", type=int_range, help="m values (factorial sets, range offsets)")
    sp.set_defaults(func=cmd_explore)
    assert set(EXPLORATION_ALIASES.values()) <= set(EXPLORATIONS)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BoundExceeded as exc:
        print(f"resource bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (SpecError, ConfigError, WindowTooShort, ValueError, KeyError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
