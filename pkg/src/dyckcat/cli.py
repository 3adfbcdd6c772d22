"""Command-line front end.

Subcommands: enum, classes, canon, series, verify.  All output is
deterministic; JSON objects keep a fixed key order and rationals are
normalized.  Exit codes: 0 success, 1 verification failure, 2 usage error,
3 invalid path or pattern input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import verify as verify_mod
from .paths import DEFAULT_MAX_LENGTH, PathError, count_paths, enumerate_paths, parse_path
from .patterns import PATTERNS, UnknownPattern, count_classes, partition_classes
from .reps import canonical
from .series import DEFAULT_ORDER, MAX_ORDER, SeriesError, UnknownName, gf

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BAD_INPUT = 3


def _print_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _print_csv(rows, header) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _cmd_enum(args) -> int:
    n = args.length
    if args.list and n > args.max_length:
        print(
            f"error: --list requires length <= brute-force bound {args.max_length}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    count = count_paths(n)
    words = [p.word() for p in enumerate_paths(n)] if args.list else None
    if args.format == "json":
        obj = {"command": "enum", "length": n, "count": count}
        if words is not None:
            obj["paths"] = words
        _print_json(obj)
    elif args.format == "csv":
        rows = [[n, count]] if words is None else [[n, w] for w in words]
        _print_csv(rows, ["n", "count" if words is None else "path"])
    else:
        print(f"length {n}: {count} paths")
        if words is not None:
            for w in words:
                print(w)
    return EXIT_OK


def _check_pattern_arg(pattern: str) -> str:
    if pattern not in PATTERNS:
        print(
            f"UnknownPattern: {pattern!r} is not one of {', '.join(PATTERNS)}",
            file=sys.stderr,
        )
        raise SystemExit(EXIT_BAD_INPUT)
    return pattern


def _cmd_classes(args) -> int:
    pattern = _check_pattern_arg(args.pattern)
    n = args.length
    if n > args.max_length:
        print(
            f"error: length {n} exceeds brute-force bound {args.max_length}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    if args.show_profiles:
        buckets = partition_classes(n, pattern, max_length=args.max_length)
        count = len(buckets)
    else:
        buckets = None
        count = count_classes(n, pattern, max_length=args.max_length)
    if args.format == "json":
        obj = {"command": "classes", "pattern": pattern, "length": n, "class_count": count}
        if buckets is not None:
            obj["classes"] = [
                {"profile": prof.to_json(), "members": [m.word() for m in members]}
                for prof, members in buckets.items()
            ]
        _print_json(obj)
    elif args.format == "csv":
        _print_csv([[n, count]], ["n", "classes"])
    else:
        print(f"pattern {pattern}, length {n}: {count} classes")
        if buckets is not None:
            for prof, members in buckets.items():
                print(f"  {prof.to_json()}: {' '.join(m.word() for m in members)}")
    return EXIT_OK


def _cmd_canon(args) -> int:
    pattern = _check_pattern_arg(args.pattern)
    try:
        p = parse_path(args.path)
    except PathError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    image = canonical(p, pattern)
    if args.format == "json":
        _print_json(
            {
                "command": "canon",
                "pattern": pattern,
                "input": p.word(),
                "canonical": image.word(),
            }
        )
    else:
        print(image.word())
    return EXIT_OK


def _cmd_series(args) -> int:
    try:
        result = gf(args.name, args.order)
    except UnknownName as exc:
        print(f"UnknownName: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SeriesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    strings = result.to_strings()
    if args.format == "json":
        _print_json(
            {
                "command": "series",
                "name": args.name,
                "order": args.order,
                "coefficients": strings,
            }
        )
    elif args.format == "csv":
        _print_csv(list(enumerate(strings)), ["n", "coefficient"])
    else:
        print(", ".join(strings))
    return EXIT_OK


def _cmd_verify(args) -> int:
    patterns = None
    if args.patterns:
        patterns = tuple(p.strip() for p in args.patterns.split(",") if p.strip())
        for pattern in patterns:
            _check_pattern_arg(pattern)
    report = verify_mod.run_verification(
        max_length=args.max_length,
        enum_length=args.enum_length,
        series_order=args.series_order,
        patterns=patterns,
    )
    payload = verify_mod.report_to_json(report)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as handle:
            handle.write(payload)
    if args.figures:
        from . import figures

        written = figures.render_all(args.figures, max_length=min(args.max_length, 12))
        for path in written:
            print(f"figure: {path}", file=sys.stderr)
    if args.format == "json":
        sys.stdout.write(payload)
    else:
        sys.stdout.write(verify_mod.summarize(report))
    return EXIT_OK if report["status"] == "pass" else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyckcat",
        description="Exact workbench for Dyck paths with catastrophes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enum", help="count (and list) paths of one length")
    p_enum.add_argument("--length", type=int, required=True)
    p_enum.add_argument("--list", action="store_true", help="print the path words")
    p_enum.add_argument("--max-length", type=int, default=DEFAULT_MAX_LENGTH)
    p_enum.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_enum.set_defaults(func=_cmd_enum)

    p_classes = sub.add_parser("classes", help="equivalence classes for one pattern")
    p_classes.add_argument("--pattern", required=True)
    p_classes.add_argument("--length", type=int, required=True)
    p_classes.add_argument("--show-profiles", action="store_true")
    p_classes.add_argument("--max-length", type=int, default=DEFAULT_MAX_LENGTH)
    p_classes.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_classes.set_defaults(func=_cmd_classes)

    p_canon = sub.add_parser("canon", help="canonical representative of a path")
    p_canon.add_argument("--pattern", required=True)
    p_canon.add_argument("--path", required=True, help="path word, e.g. UUC2UD")
    p_canon.add_argument("--format", choices=("text", "json"), default="text")
    p_canon.set_defaults(func=_cmd_canon)

    p_series = sub.add_parser("series", help="exact coefficients of a named series")
    p_series.add_argument("--name", required=True)
    p_series.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p_series.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_series.set_defaults(func=_cmd_series)

    p_verify = sub.add_parser("verify", help="run the full cross-validation harness")
    p_verify.add_argument("--max-length", type=int, default=12)
    p_verify.add_argument("--enum-length", type=int, default=DEFAULT_MAX_LENGTH)
    p_verify.add_argument("--series-order", type=int, default=DEFAULT_ORDER)
    p_verify.add_argument("--patterns", help="comma-separated pattern filter")
    p_verify.add_argument("--report", help="write the JSON report to this file")
    p_verify.add_argument("--figures", help="render diagnostic figures into this directory")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if getattr(args, "order", 0) and not 0 <= args.order <= MAX_ORDER:
        print(f"error: order must be in [0, {MAX_ORDER}]", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code)
    except UnknownPattern as exc:
        print(f"UnknownPattern: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except PathError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
