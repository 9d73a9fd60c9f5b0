"""ringlab command line: build | check | hasse | report.

Exit codes: 0 success, 1 a check failed (or the order is not a partial
order), 2 spec/table parse error, 3 ring validation failure, 4 size cap.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import orders, posets, suites
from .ring import DEFAULT_SIZE_CAP, SizeCapError, validate
from .spec import SpecParseError, TableFormatError, build, load_table, save_table

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _load_ring(args, check_valid=True):
    source = args.in_path or args.spec or args.ring
    if source is None:
        raise CliError("no ring given (positional RING, --spec or --in)", EXIT_PARSE)
    try:
        if args.in_path or (args.spec is None and Path(source).is_file()):
            ring = load_table(source)
            if ring.size > args.size_cap:
                raise SizeCapError(f"ring of size {ring.size} exceeds size cap {args.size_cap}")
        else:
            ring = build(source, size_cap=args.size_cap)
    except SizeCapError as exc:
        raise CliError(str(exc), EXIT_CAP) from None
    except (SpecParseError, TableFormatError, OSError) as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    if check_valid:
        report = validate(ring)
        if not report.passed:
            details = ", ".join(f"{name} at {w}" for name, w in report.failures)
            raise CliError(f"{ring.label} is not a *-ring: {details}", EXIT_INVALID)
    return ring


def _output_path(args):
    return args.out or args.dest


def cmd_build(args) -> int:
    ring = _load_ring(args)
    out = _output_path(args)
    if out is None:
        raise CliError("build needs an output path", EXIT_PARSE)
    save_table(ring, out)
    print(f"{ring.label}: {ring.size} elements -> {out}")
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        selection = suites.parse_selection(args.suite)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    ring = _load_ring(args)

    def run(name):
        start = time.perf_counter()
        report = suites.run_suite(ring, name, order=args.order)
        return report, time.perf_counter() - start

    with ThreadPoolExecutor(max_workers=max(1, args.threads)) as pool:
        results = list(pool.map(run, selection))
    overall = all(r.passed or r.skipped for r, _ in results)

    doc = {
        "schema": "ringlab/1",
        "label": ring.label,
        "size": ring.size,
        "order": args.order,
        "passed": overall,
        "checks": [],
    }
    for report, seconds in results:
        entry = report.to_dict()
        if args.timings:
            entry["seconds"] = round(seconds, 6)
        doc["checks"].append(entry)

    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(f"{ring.label} (size {ring.size})")
        for report, seconds in results:
            text = report.summary()
            if args.timings:
                text = text.replace("\n", f" [{seconds:.3f}s]\n", 1) if "\n" in text else f"{text} [{seconds:.3f}s]"
            print(text)
        print("OVERALL:", "PASS" if overall else "FAIL")
    out = args.report or _output_path(args)
    if out:
        Path(out).write_text(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK if overall else EXIT_FAIL


def cmd_hasse(args) -> int:
    ring = _load_ring(args)
    try:
        poset = posets.make_poset(orders.relation_matrix(ring, args.order))
    except posets.NotPartialOrderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    dot = posets.hasse_dot(poset, ring.element_names)
    out = _output_path(args)
    if out:
        Path(out).write_text(dot)
    else:
        sys.stdout.write(dot)
    return EXIT_OK


def cmd_report(args) -> int:
    ring = _load_ring(args)
    summary = suites.ring_summary(ring)
    if args.format == "json":
        text = json.dumps(summary, indent=2)
    else:
        text = "\n".join(f"{k}: {v}" for k, v in summary.items())
    out = _output_path(args)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ringlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_dest=True):
        p.add_argument("ring", nargs="?", help="ring spec text (e.g. 'zn 10') or table file path")
        if with_dest:
            p.add_argument("dest", nargs="?", help="output path")
        p.add_argument("--spec", help="ring spec text")
        p.add_argument("--in", dest="in_path", help="ring table file")
        p.add_argument("--out", help="output path")
        p.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
        p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("build", help="build a ring and write its table file")
    common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="run check suites")
    common(p)
    p.add_argument("--suite", default="all", help=f"comma-separated subset of: {','.join(suites.SUITES)}")
    p.add_argument("--order", choices=("natural", "star"), default="natural")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--timings", action="store_true", help="include per-check wall time")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("hasse", help="export the Hasse diagram as DOT")
    common(p)
    p.add_argument("--order", choices=("natural", "star"), default="natural")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("report", help="summarise ring properties")
    common(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args, extras = parser.parse_known_args(argv)
    # positionals given after options land in extras
    for extra in extras:
        if extra.startswith("-"):
            parser.error(f"unrecognized arguments: {extra}")
        if args.ring is None:
            args.ring = extra
        elif args.dest is None:
            args.dest = extra
        else:
            parser.error(f"unrecognized arguments: {extra}")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
