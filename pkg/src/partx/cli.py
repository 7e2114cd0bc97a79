"""Command-line front end for the partition statistics toolkit.

Commands: count, stats, table, verify, series, cache.  Output is
human-readable text by default; --json and --csv switch to machine
formats with the same numbers.  Exit codes: 0 success, 1 when a
verification or consistency check failed, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import counting, identities, partitions, series
from .counting import CountTable, TableFormatError

PARTITION_LIST_AUTO_MAX = 12

_BACKENDS = {
    "closed": identities.CLOSED_FORM,
    "oracle": identities.ORACLE,
    "both": identities.BOTH,
}

_IDENTITY_CHOICES = [name.replace("_", "-") for name in identities.IDENTITY_IDS]


def _parse_range(text: str, flag: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            bounds = (int(lo), int(hi))
        else:
            bounds = (int(text), int(text))
    except ValueError:
        raise ValueError(f"{flag} expects 'A' or 'A..B', got {text!r}") from None
    if bounds[0] > bounds[1]:
        raise ValueError(f"{flag} range is empty: {text}")
    return bounds


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _emit_csv(rows: list[list]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _load_cache(args) -> tuple[CountTable | None, int | None]:
    """Open the table behind --cache, honouring --verify-cache.

    Returns (table, exit_code); a non-None exit code aborts the command.
    """
    if getattr(args, "verify_cache", False) and not args.cache:
        raise ValueError("--verify-cache requires --cache")
    if not args.cache:
        return None, None
    if os.path.exists(args.cache):
        table = counting.load_table(args.cache)
    else:
        table = CountTable()
    if getattr(args, "verify_cache", False):
        bad = counting.consistency_check(table)
        if bad:
            print(
                f"cache {args.cache}: {len(bad)} entries disagree with the "
                f"recurrence (first at n={bad[0]})",
                file=sys.stderr,
            )
            return None, 1
    return table, None


def _save_cache(args, table: CountTable | None) -> None:
    if table is not None and args.cache:
        counting.save_table(table, args.cache)


def _cmd_count(args) -> int:
    table, abort = _load_cache(args)
    if abort is not None:
        return abort
    value = counting.partition_count(args.n, table)
    if args.json:
        _emit_json({"command": "count", "n": args.n, "partition_count": value})
    elif args.csv:
        _emit_csv([["n", "partition_count"], [args.n, value]])
    else:
        print(value)
    _save_cache(args, table)
    return 0


def _cmd_stats(args) -> int:
    n = args.n
    if n < 1:
        raise ValueError(f"stats needs n >= 1, got n={n}")
    table, abort = _load_cache(args)
    if abort is not None:
        return abort
    kmax = args.kmax if args.kmax is not None else n
    if kmax < 1:
        raise ValueError(f"--kmax must be >= 1, got {kmax}")
    p = counting.partition_count(n, table)
    s = counting.distinct_members(n, table)
    occurrences = {k: counting.occurrence_count(k, n, table) for k in range(1, kmax + 1)}

    show_partitions = args.partitions
    if show_partitions is None:
        show_partitions = n <= PARTITION_LIST_AUTO_MAX
    listing = None
    if show_partitions:
        listing = [str(part) for part in partitions.enumerate_partitions(n)]

    if args.json:
        _emit_json(
            {
                "command": "stats",
                "n": n,
                "partition_count": p,
                "distinct_member_total": s,
                "occurrence_counts": {str(k): v for k, v in occurrences.items()},
            }
        )
    elif args.csv:
        rows = [["stat", "value"], [f"P({n})", p], [f"S({n})", s]]
        rows += [[f"Q_{k}({n})", v] for k, v in occurrences.items()]
        _emit_csv(rows)
    else:
        print(f"n = {n}")
        print(f"P({n}) = {p}")
        print(f"S({n}) = {s}")
        for k, v in occurrences.items():
            print(f"Q_{k}({n}) = {v}")
        if listing is not None:
            print(f"partitions of {n} ({p} total):")
            for line in listing:
                print(f"  {line}")
    _save_cache(args, table)
    return 0


def _table_columns(n: int, kmax: int, table: CountTable | None) -> tuple[int, list[dict]]:
    s = counting.distinct_members(n, table)
    columns = []
    for k in range(1, kmax + 1):
        values = [counting.occurrence_count(k, n + i, table) for i in range(k)]
        columns.append({"k": k, "values": values, "sum": sum(values)})
    return s, columns


def _cmd_table(args) -> int:
    n, kmax = args.n, args.kmax
    if n < 1:
        raise ValueError(f"table needs n >= 1, got n={n}")
    if kmax < 1:
        raise ValueError(f"--kmax must be >= 1, got {kmax}")
    table, abort = _load_cache(args)
    if abort is not None:
        return abort
    s, columns = _table_columns(n, kmax, table)

    if args.json:
        _emit_json(
            {
                "command": "table",
                "n": n,
                "kmax": kmax,
                "distinct_member_total": s,
                "columns": columns,
            }
        )
    elif args.csv:
        rows = [["n"] + [f"k={c['k']}" for c in columns]]
        for i in range(kmax):
            row: list = [n + i]
            for c in columns:
                row.append(c["values"][i] if i < c["k"] else "")
            rows.append(row)
        rows.append(["total"] + [c["sum"] for c in columns])
        _emit_csv(rows)
    else:
        cells = [["n\\k"] + [str(c["k"]) for c in columns]]
        for i in range(kmax):
            row = [str(n + i)]
            for c in columns:
                row.append(str(c["values"][i]) if i < c["k"] else ".")
            cells.append(row)
        cells.append(["total"] + [str(c["sum"]) for c in columns])
        widths = [max(len(r[j]) for r in cells) for j in range(kmax + 1)]
        print(f"occurrence table for n={n}, k=1..{kmax} (every column sums to S({n})={s})")
        for row in cells:
            print("  ".join(val.rjust(w) for val, w in zip(row, widths)))
    _save_cache(args, table)
    return 0


def _format_params(params: dict) -> str:
    return " ".join(f"{key}={value}" for key, value in params.items())


def _cmd_verify(args) -> int:
    identity = args.identity.replace("-", "_")
    if args.backend is None:
        backend = identities.ORACLE if identity == "elder" else identities.CLOSED_FORM
    else:
        backend = _BACKENDS[args.backend]
    if args.n is None:
        raise ValueError("verify needs an --n range")
    n_range = _parse_range(args.n, "--n")
    k_range = _parse_range(args.k, "--k") if args.k else None

    result = identities.sweep(
        identity,
        n_range,
        k_range=k_range,
        backend=backend,
        family=args.family,
        modulus=args.mod,
    )

    if args.json:
        _emit_json(result.as_dict())
    elif args.csv:
        rows = [
            ["identity", "range", "total", "failures"],
            [result.identity, result.range_description, result.total_checked, len(result.failures)],
        ]
        if result.failures:
            rows.append(["identity", "params", "lhs", "rhs", "backend"])
            for f in result.failures:
                rows.append([f.identity, _format_params(f.params), f.lhs, f.rhs, f.backend])
        _emit_csv(rows)
    else:
        print(f"identity: {result.identity}")
        print(f"range: {result.range_description}")
        print(f"backend: {backend}")
        print(f"checked: {result.total_checked}")
        print(f"failures: {len(result.failures)}")
        for f in result.failures:
            print(f"  FAIL {_format_params(f.params)} lhs={f.lhs} rhs={f.rhs} backend={f.backend}")
        print("PASS" if result.ok else "FAIL")
    return 0 if result.ok else 1


def _cmd_series(args) -> int:
    kind = args.kind
    if kind == "gk" and args.k is None:
        raise ValueError("series gk needs --k")
    if kind != "gk" and args.k is not None:
        raise ValueError(f"series {kind} does not take --k")
    if kind == "double-sum" and args.mod is not None:
        raise ValueError("series double-sum is integer-only; --mod is not supported")
    if kind == "f":
        result = series.euler_inverse_product(args.trunc, args.mod)
    elif kind == "gk":
        result = series.qk_generating_function(args.k, args.trunc, args.mod)
    elif kind == "euler4":
        result = series.euler_product_pow(4, args.trunc, args.mod)
    else:  # double-sum
        result = series.double_sum_expansion(args.trunc)
    sys.stdout.write(series.format_series(result))
    return 0


def _cmd_cache(args) -> int:
    if args.action == "build":
        if args.max is None:
            raise ValueError("cache build needs --max")
        if args.max < 0:
            raise ValueError(f"--max must be nonnegative, got {args.max}")
        table = CountTable().extend(args.max)
        counting.save_table(table, args.cache)
        print(f"saved P(0..{table.max_n}) to {args.cache}")
        return 0
    # check
    if args.max is not None:
        raise ValueError("cache check does not take --max")
    table = counting.load_table(args.cache)
    bad = counting.consistency_check(table)
    if bad:
        for n in bad:
            print(f"mismatch at n={n}: stored {table[n]}, recomputed "
                  f"{counting.partition_count(n)}")
        print(f"FAIL: {len(bad)} of {table.max_n + 1} entries are wrong")
        return 1
    print(f"ok: {table.max_n + 1} entries match the recurrence")
    return 0


def _add_format_flags(sub) -> None:
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="emit JSON")
    group.add_argument("--csv", action="store_true", help="emit CSV")


def _add_cache_flags(sub) -> None:
    sub.add_argument("--cache", metavar="PATH", help="partition-table file to load and update")
    sub.add_argument(
        "--verify-cache",
        action="store_true",
        help="recompute the loaded cache entries and fail on any mismatch",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partx",
        description="Exact partition statistics: counts, identity sweeps, series dumps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="print P(n)")
    p_count.add_argument("n", type=int)
    _add_format_flags(p_count)
    _add_cache_flags(p_count)
    p_count.set_defaults(handler=_cmd_count)

    p_stats = sub.add_parser("stats", help="print P, S and Q_k for one n")
    p_stats.add_argument("n", type=int)
    p_stats.add_argument("--kmax", type=int, help="largest k to report (default: n)")
    p_stats.add_argument(
        "--partitions",
        action=argparse.BooleanOptionalAction,
        default=None,
        help=f"list the partitions (default: only for n <= {PARTITION_LIST_AUTO_MAX})",
    )
    _add_format_flags(p_stats)
    _add_cache_flags(p_stats)
    p_stats.set_defaults(handler=_cmd_stats)

    p_table = sub.add_parser("table", help="Q_k(n..n+k-1) columns with their sums")
    p_table.add_argument("n", type=int)
    p_table.add_argument("--kmax", type=int, required=True)
    _add_format_flags(p_table)
    _add_cache_flags(p_table)
    p_table.set_defaults(handler=_cmd_table)

    p_verify = sub.add_parser("verify", help="sweep one identity over a range")
    p_verify.add_argument("identity", choices=_IDENTITY_CHOICES)
    p_verify.add_argument("--n", metavar="A..B", help="inclusive n range (or a single value)")
    p_verify.add_argument("--k", metavar="A..B", help="inclusive k range (or a single value)")
    p_verify.add_argument("--family", type=int, help="congruence family (5, 7 or 11)")
    p_verify.add_argument("--mod", type=int, help="modulus for qk-congruence (default: family)")
    p_verify.add_argument("--backend", choices=sorted(_BACKENDS))
    _add_format_flags(p_verify)
    p_verify.set_defaults(handler=_cmd_verify)

    p_series = sub.add_parser("series", help="dump a generating series")
    p_series.add_argument("kind", choices=["f", "gk", "euler4", "double-sum"])
    p_series.add_argument("--trunc", type=int, required=True)
    p_series.add_argument("--k", type=int, help="part value for gk")
    p_series.add_argument("--mod", type=int, help="compute in the integers mod M")
    p_series.set_defaults(handler=_cmd_series)

    p_cache = sub.add_parser("cache", help="build or check a partition-table file")
    p_cache.add_argument("action", choices=["build", "check"])
    p_cache.add_argument("--cache", metavar="PATH", required=True)
    p_cache.add_argument("--max", type=int, help="largest n to compute (build only)")
    p_cache.set_defaults(handler=_cmd_cache)

    return parser


def run(argv: list[str]) -> int:
    """Parse argv, dispatch, and return the exit code (never raises SystemExit)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except TableFormatError as exc:
        print(f"partx: cache error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"partx: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"partx: error: {exc}", file=sys.stderr)
        return 2


def main(argv: list[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
