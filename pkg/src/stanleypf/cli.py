"""Command-line front end: tables, verification suites, partition listings,
and sequence export with an optional on-disk coefficient cache.

Exit codes: 0 success / all checks pass, 1 verification failure,
2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import __version__, stanley, verify
from .partitions import classify, hook_length, partitions_of

try:
    import fcntl
except ImportError:  # non-POSIX: fall back to unlocked cache access
    fcntl = None

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3

CACHE_ENV_VAR = "STANLEYPF_CACHE"
PARTITION_LISTING_CAP = 30  # p(30) = 5604 lines is the useful terminal ceiling
JSON_SAFE_MAGNITUDE = 2**53

STATS = ("p", "t", "u", "f")
FORMATS = ("text", "json", "csv", "bfile")


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    order: int = verify.DEFAULT_ORDER
    enum_bound: int = verify.DEFAULT_ENUM_BOUND
    oracle_bound: int = verify.DEFAULT_ORACLE_BOUND
    output_format: str = "text"
    cache_path: str | None = None

    def __post_init__(self) -> None:
        if self.order < 2:
            raise UsageError(f"--order must be at least 2, got {self.order}")
        if self.enum_bound < 0 or self.oracle_bound < 0:
            raise UsageError("bounds must be nonnegative")
        if self.output_format not in FORMATS:
            raise UsageError(f"unknown format {self.output_format!r}")


def _json_coeff(value: int):
    # decimal strings beyond 53-bit magnitude keep JSON interchange lossless
    return value if abs(value) < JSON_SAFE_MAGNITUDE else str(value)


def _parse_json_coeff(value) -> int:
    return int(value)


# ---------------------------------------------------------------------------
# coefficient cache

def _cache_file(cache_dir: str, stat: str, order: int) -> str:
    return os.path.join(cache_dir, f"{stat}-o{order}-v{__version__}.json")


class _CacheLock:
    """Advisory flock on the cache directory, exclusive per invocation."""

    def __init__(self, cache_dir: str):
        self.path = os.path.join(cache_dir, ".lock")
        self.handle = None

    def __enter__(self):
        if fcntl is None:
            return self
        self.handle = open(self.path, "a+")
        try:
            fcntl.flock(self.handle, fcntl.LOCK_EX | fcntl.LOCK_NB)
        except OSError:
            self.handle.close()
            raise OSError(f"cache directory {self.path!r} is locked by another process")
        return self

    def __exit__(self, *exc):
        if self.handle is not None:
            fcntl.flock(self.handle, fcntl.LOCK_UN)
            self.handle.close()


def cache_store(cache_dir: str, stat: str, order: int, values) -> str:
    """Write one coefficient column, atomically, keyed by (stat, order, version)."""
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_file(cache_dir, stat, order)
    payload = {
        "version": __version__,
        "stat": stat,
        "order": order,
        "values": [str(v) for v in values],
    }
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(payload, fh)
    os.replace(tmp, path)
    return path


def cache_load(cache_dir: str, stat: str, order: int) -> list[int] | None:
    """Read one cached column; None on miss. Stale versions never match the
    key, and a corrupt file warns and recomputes rather than answer wrongly."""
    path = _cache_file(cache_dir, stat, order)
    if not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            payload = json.load(fh)
        if payload.get("version") != __version__ or payload.get("stat") != stat:
            return None
        values = [int(v) for v in payload["values"]]
        if len(values) != order + 1:
            raise ValueError("wrong number of coefficients")
        return values
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"warning: ignoring corrupt cache file {path}: {exc}", file=sys.stderr)
        return None


def cache_roundtrip(config: CliConfig, table: stanley.StanleyTable) -> stanley.StanleyTable:
    """Persist a table's four columns and rebuild the table from disk."""
    if config.cache_path is None:
        raise UsageError("no cache path configured")
    with _make_and_lock(config.cache_path):
        columns = {}
        for stat in STATS:
            cache_store(config.cache_path, stat, table.max_n, table.column(stat))
            loaded = cache_load(config.cache_path, stat, table.max_n)
            if loaded is None:
                raise OSError(f"cache round-trip failed for {stat!r} in {config.cache_path}")
            columns[stat] = tuple(loaded)
    return stanley.StanleyTable(
        table.max_n, columns["p"], columns["t"], columns["u"], columns["f"], table.source
    )


def _make_and_lock(cache_dir: str) -> _CacheLock:
    os.makedirs(cache_dir, exist_ok=True)
    return _CacheLock(cache_dir)


_SERIES_FOR_STAT = {
    "p": stanley.p_series,
    "t": stanley.t_series_andrews,
    "u": stanley.u_series,
    "f": stanley.f_series,
}


def _stat_values(config: CliConfig, stat: str) -> list[int]:
    """One generating-function column at config.order, cache-aware."""
    if config.cache_path is not None:
        with _make_and_lock(config.cache_path):
            cached = cache_load(config.cache_path, stat, config.order)
            if cached is not None:
                return cached
            values = list(_SERIES_FOR_STAT[stat](config.order).coeffs)
            cache_store(config.cache_path, stat, config.order, values)
            return values
    return list(_SERIES_FOR_STAT[stat](config.order).coeffs)


# ---------------------------------------------------------------------------
# commands

def cmd_table(config: CliConfig, stats: list[str], max_n: int, oracle: bool, out) -> int:
    if max_n > config.order:
        raise UsageError(
            f"--max {max_n} exceeds the series order {config.order}; raise --order"
        )
    columns = {s: _stat_values(config, s)[: max_n + 1] for s in stats}
    oracle_columns = {}
    mismatch = False
    if oracle:
        if max_n > config.oracle_bound:
            raise UsageError(
                f"--oracle enumeration is capped at --oracle-bound {config.oracle_bound}; "
                f"raise it to table {max_n} by brute force"
            )
        enum = stanley.table_from_enumeration(max_n)
        oracle_columns = {s: list(enum.column(s)) for s in stats}
        mismatch = any(columns[s] != oracle_columns[s] for s in stats)

    if config.output_format == "text":
        header = ["n"] + stats + ([f"{s}.enum" for s in stats] + ["match"] if oracle else [])
        rows = []
        for n in range(max_n + 1):
            row = [str(n)] + [str(columns[s][n]) for s in stats]
            if oracle:
                row += [str(oracle_columns[s][n]) for s in stats]
                row.append("ok" if all(columns[s][n] == oracle_columns[s][n] for s in stats) else "MISMATCH")
            rows.append(row)
        widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
        for row in [header] + rows:
            print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)), file=out)
    elif config.output_format == "csv":
        header = ["n"] + stats + ([f"{s}_enum" for s in stats] if oracle else [])
        print(",".join(header), file=out)
        for n in range(max_n + 1):
            row = [str(n)] + [str(columns[s][n]) for s in stats]
            if oracle:
                row += [str(oracle_columns[s][n]) for s in stats]
            print(",".join(row), file=out)
    elif config.output_format == "json":
        doc = {"max_n": max_n, "columns": {s: [_json_coeff(v) for v in columns[s]] for s in stats}}
        if oracle:
            doc["oracle"] = {s: [_json_coeff(v) for v in oracle_columns[s]] for s in stats}
            doc["match"] = not mismatch
        print(json.dumps(doc), file=out)
    else:
        raise UsageError("table output supports text, csv, or json")
    return EXIT_VERIFY_FAIL if mismatch else EXIT_OK


def cmd_verify(config: CliConfig, suite: str, out) -> int:
    reports = verify.run_suite(
        suite,
        order=config.order,
        enum_bound=config.enum_bound,
        oracle_bound=config.oracle_bound,
    )
    passed = all(r.passed for r in reports)
    if config.output_format == "text":
        for r in reports:
            print(r.to_line(), file=out)
        n_fail = sum(1 for r in reports if not r.passed)
        print(f"{len(reports)} checks: {len(reports) - n_fail} passed, {n_fail} failed", file=out)
    elif config.output_format == "json":
        doc = {
            "suite": suite,
            "passed": passed,
            "reports": [
                {**r.to_dict(),
                 "lhs_value": _json_coeff(r.lhs_value) if r.lhs_value is not None else None,
                 "rhs_value": _json_coeff(r.rhs_value) if r.rhs_value is not None else None}
                for r in reports
            ],
        }
        print(json.dumps(doc), file=out)
    elif config.output_format == "csv":
        print("check_name,order_or_bound,passed,first_failure_index,lhs_value,rhs_value", file=out)
        for r in reports:
            cells = [
                r.check_name,
                str(r.order_or_bound),
                str(r.passed).lower(),
                "" if r.first_failure_index is None else str(r.first_failure_index),
                "" if r.lhs_value is None else str(r.lhs_value),
                "" if r.rhs_value is None else str(r.rhs_value),
            ]
            print(",".join(cells), file=out)
    else:
        raise UsageError("verification reports support text, json, or csv")
    return EXIT_OK if passed else EXIT_VERIFY_FAIL


def cmd_partition(config: CliConfig, n: int, filt: str, show_hooks: bool, out) -> int:
    if n > PARTITION_LISTING_CAP:
        raise UsageError(f"partition listings are capped at n <= {PARTITION_LISTING_CAP}")
    entries = []
    for lam in partitions_of(n):
        stats = classify(lam)
        kind = "t" if stats.is_t_type else "u"
        if filt != "all" and kind != filt:
            continue
        entries.append((lam, stats, kind))

    if config.output_format == "text":
        for lam, stats, kind in entries:
            parts = "(" + ", ".join(str(x) for x in lam) + ")" if lam else "()"
            print(
                f"{parts}  O={stats.odd_parts} O'={stats.odd_parts_conjugate} "
                f"He={stats.even_hooks} type={kind}",
                file=out,
            )
            if show_hooks and lam:
                for i, row in enumerate(lam, 1):
                    print("    " + " ".join(str(hook_length(lam, i, j)) for j in range(1, row + 1)), file=out)
    elif config.output_format == "json":
        doc = []
        for lam, stats, kind in entries:
            entry = {
                "parts": list(lam),
                "odd_parts": stats.odd_parts,
                "odd_parts_conjugate": stats.odd_parts_conjugate,
                "even_hooks": stats.even_hooks,
                "type": kind,
            }
            if show_hooks:
                entry["hooks"] = [
                    [hook_length(lam, i, j) for j in range(1, row + 1)]
                    for i, row in enumerate(lam, 1)
                ]
            doc.append(entry)
        print(json.dumps(doc), file=out)
    else:
        raise UsageError("partition listings support text or json")
    return EXIT_OK


def render_bfile(values) -> str:
    return "".join(f"{n} {v}\n" for n, v in enumerate(values))


def render_csv(stat: str, values) -> str:
    return f"n,{stat}\n" + "".join(f"{n},{v}\n" for n, v in enumerate(values))


def render_json(stat: str, values) -> str:
    return json.dumps({"stat": stat, "offset": 0, "values": [_json_coeff(v) for v in values]}) + "\n"


def parse_bfile(text: str) -> list[int]:
    values = []
    for line in text.splitlines():
        if line.strip():
            n, v = line.split()
            assert int(n) == len(values), "b-file indices must start at 0 and be contiguous"
            values.append(int(v))
    return values


def parse_csv(text: str) -> list[int]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    return [int(ln.split(",")[1]) for ln in lines[1:]]


def parse_json_export(text: str) -> list[int]:
    return [_parse_json_coeff(v) for v in json.loads(text)["values"]]


def cmd_export(config: CliConfig, stat: str, max_n: int, out_path: str | None, out) -> int:
    if max_n > config.order:
        raise UsageError(
            f"--max {max_n} exceeds the series order {config.order}; raise --order"
        )
    values = _stat_values(config, stat)[: max_n + 1]
    fmt = config.output_format
    if fmt in ("bfile", "text"):  # a b-file is already plain text
        rendered = render_bfile(values)
    elif fmt == "csv":
        rendered = render_csv(stat, values)
    elif fmt == "json":
        rendered = render_json(stat, values)
    else:
        raise UsageError(f"unknown export format {fmt!r}")
    if out_path is None:
        out.write(rendered)
    else:
        try:
            with open(out_path, "w") as fh:
                fh.write(rendered)
        except OSError as exc:
            raise OSError(f"cannot write {out_path!r}: {exc.strerror}") from exc
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=verify.DEFAULT_ORDER,
                        help="series truncation order (default 200)")
    common.add_argument("--enum-bound", type=int, default=verify.DEFAULT_ENUM_BOUND,
                        help="exhaustive combinatorial bound (default 25)")
    common.add_argument("--oracle-bound", type=int, default=verify.DEFAULT_ORACLE_BOUND,
                        help="brute-force cross-check bound (default 60)")
    common.add_argument("--format", choices=FORMATS, default="text", dest="output_format",
                        help="output format (default text)")
    common.add_argument("--cache", default=None,
                        help=f"coefficient cache directory (or ${CACHE_ENV_VAR})")

    parser = argparse.ArgumentParser(
        prog="stanleypf",
        description="Exact computation and verification of Stanley's partition "
                    "function t(n), its complement u(n), and the signed count f(n).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p_table = sub.add_parser("table", parents=[common], help="print columns of p, t, u, f")
    p_table.add_argument("--stats", default="p,t,u,f",
                         help="comma-separated subset of p,t,u,f (default all)")
    p_table.add_argument("--max", type=int, required=True, dest="max_n", help="largest n to print")
    p_table.add_argument("--oracle", action="store_true",
                         help="add brute-force enumeration columns and per-row match markers")

    p_verify = sub.add_parser("verify", parents=[common], help="run identity verification suites")
    p_verify.add_argument("--suite", choices=verify.SUITE_NAMES, default="all")

    p_part = sub.add_parser("partition", parents=[common], help="list partitions of n with statistics")
    p_part.add_argument("--n", type=int, required=True, help="the number to partition")
    p_part.add_argument("--filter", choices=("all", "t", "u"), default="all")
    p_part.add_argument("--show-hooks", action="store_true", help="print the hook-length grid per partition")

    p_export = sub.add_parser("export", parents=[common], help="export one sequence")
    p_export.add_argument("--stat", choices=STATS, required=True)
    p_export.add_argument("--max", type=int, required=True, dest="max_n")
    p_export.add_argument("--out", default=None, help="output file (default stdout)")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already printed the message
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if args.command is None:
        parser.print_help()
        return EXIT_USAGE
    try:
        config = CliConfig(
            order=args.order,
            enum_bound=args.enum_bound,
            oracle_bound=args.oracle_bound,
            output_format=args.output_format,
            cache_path=args.cache or os.environ.get(CACHE_ENV_VAR),
        )
        out = sys.stdout
        if args.command == "table":
            stats = [s.strip() for s in args.stats.split(",") if s.strip()]
            for s in stats:
                if s not in STATS:
                    raise UsageError(f"unknown statistic {s!r}; choose from p,t,u,f")
            if not stats:
                raise UsageError("no statistics requested")
            if args.max_n < 0:
                raise UsageError("--max must be nonnegative")
            return cmd_table(config, stats, args.max_n, args.oracle, out)
        if args.command == "verify":
            return cmd_verify(config, args.suite, out)
        if args.command == "partition":
            if args.n < 0:
                raise UsageError("--n must be nonnegative")
            return cmd_partition(config, args.n, args.filter, args.show_hooks, out)
        if args.command == "export":
            if args.max_n < 0:
                raise UsageError("--max must be nonnegative")
            return cmd_export(config, args.stat, args.max_n, args.out, out)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
