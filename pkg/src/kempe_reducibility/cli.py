"""Command-line front end: ``check``, ``classes`` and ``validate``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import library
from .kempe import OracleMismatch
from .pattern import PatternError, line_graph, load_pattern
from .ranks import class_rows, is_reducible_pattern, rank_histogram_table, verdict_to_json

log = logging.getLogger("kempe_reducibility")

EXIT_OK = 0
EXIT_NOT_REDUCIBLE = 1
EXIT_INPUT_ERROR = 2
EXIT_MIXED = 3
EXIT_ORACLE_MISMATCH = 4


def _fmt_pair(pair) -> str:
    return "--" if pair is None else f"({pair[0]},{pair[1]})"


def _fmt_coloring(rep) -> str:
    return "(" + ",".join(map(str, rep)) + ")"


def _resolve(args, errors: list[str]):
    """Patterns named by ``--builtin`` and positional paths, in command-line order."""
    patterns = []
    for name in args.builtin or []:
        if name == "all":
            patterns.extend(library.all_builtins())
            continue
        try:
            patterns.append(library.builtin(name))
        except KeyError as exc:
            errors.append(str(exc.args[0]))
    for path in args.paths:
        try:
            patterns.append(load_pattern(path))
        except (OSError, PatternError) as exc:
            errors.append(f"{path}: {exc}")
    return patterns


def _run(patterns, args):
    verdicts = []
    for p in patterns:
        start = time.perf_counter()
        verdicts.append(is_reducible_pattern(p, oracle_check=args.oracle_check))
        log.info("%s: %.3fs", p.name, time.perf_counter() - start)
    return verdicts


def _verdict_exit(verdicts) -> int:
    flags = {v.reducible for v in verdicts}
    if flags == {True}:
        return EXIT_OK
    if flags == {False}:
        return EXIT_NOT_REDUCIBLE
    return EXIT_MIXED


def cmd_check(args, out) -> int:
    errors: list[str] = []
    patterns = _resolve(args, errors)
    if errors:
        for e in errors:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    verdicts = _run(patterns, args)

    if args.format == "csv":
        out.write(rank_histogram_table(verdicts, "csv"))
    elif args.format == "json":
        json.dump([verdict_to_json(v, p) for v, p in zip(verdicts, patterns)], out, indent=2)
        out.write("\n")
    else:
        for v in verdicts:
            status = "reducible" if v.reducible else "NOT reducible"
            counts = "+".join(map(str, v.rank_histogram))
            out.write(f"{v.pattern}: {status}, k0={v.k0}, {v.total_classes} = {counts}")
            if v.unranked:
                out.write(f", {len(v.unranked)} unranked")
            out.write("\n")
            if args.stage_trace:
                for k, n in enumerate(v.rank_histogram):
                    out.write(f"  stage {k}: {n} newly ranked\n")
        out.write("\n" + rank_histogram_table(verdicts, "text"))
    return _verdict_exit(verdicts)


def cmd_classes(args, out) -> int:
    errors: list[str] = []
    patterns = _resolve(args, errors)
    if errors:
        for e in errors:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    verdicts = _run(patterns, args)

    if args.format == "json":
        json.dump([verdict_to_json(v, p) for v, p in zip(verdicts, patterns)], out, indent=2)
        out.write("\n")
        return _verdict_exit(verdicts)
    if args.format == "csv":
        out.write("pattern,rep,orbit_size,rank,witness_pair\n")
    for v, p in zip(verdicts, patterns):
        rows = class_rows(p, v.table)
        if args.format == "csv":
            for r in rows:
                rank = "" if r["rank"] is None else r["rank"]
                pair = "" if r["witness_pair"] is None else _fmt_pair(r["witness_pair"])
                out.write(f'{v.pattern},{"".join(map(str, r["rep"]))},{r["orbit_size"]},{rank},"{pair}"\n')
            continue
        out.write(f"{v.pattern}: {len(rows)} classes\n")
        for r in rows:
            rank = "none" if r["rank"] is None else str(r["rank"])
            out.write(f"  {_fmt_coloring(r['rep'])}  orbit {r['orbit_size']:>3}  "
                      f"rank {rank:>4}  pair {_fmt_pair(r['witness_pair'])}\n")
    return _verdict_exit(verdicts)


def cmd_validate(args, out) -> int:
    status = EXIT_OK
    targets = [(f"builtin {n}", n, None) for n in _expand_builtins(args.builtin or [])]
    targets += [(path, None, path) for path in args.paths]
    if not targets:
        print("error: nothing to validate", file=sys.stderr)
        return EXIT_INPUT_ERROR
    for label, name, path in targets:
        try:
            p = library.builtin(name) if name else load_pattern(path)
        except (KeyError, OSError, PatternError) as exc:
            msg = exc.args[0] if isinstance(exc, KeyError) else exc
            out.write(f"{label}: error: {msg}\n")
            status = EXIT_INPUT_ERROR
            continue
        out.write(f"{label}: ok: {p.n_vertices} vertices, {len(p.internal_edges)} internal edges, "
                  f"{p.n_frontier} half-edges, symmetry order {len(p.symmetries)} "
                  f"({len(line_graph(p))} line-graph vertices)\n")
    return status


def _expand_builtins(names):
    out = []
    for n in names:
        out.extend(library.NAMES if n == "all" else [n])
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kempe-reducibility",
        description="Check Kempe-chain reducibility of subcubic plane patterns.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, with_run=True):
        sp.add_argument("paths", nargs="*", help="pattern files")
        sp.add_argument("--builtin", action="append", metavar="NAME|all",
                        help=f"built-in pattern ({', '.join(library.NAMES)}) or 'all'; repeatable")
        sp.add_argument("--out", help="write the report to this file instead of stdout")
        if with_run:
            sp.add_argument("--format", choices=("text", "csv", "json"), default="text")
            sp.add_argument("--oracle-check", action="store_true",
                            help="cross-check every quasi-matching decision by brute force")
            sp.add_argument("--stage-trace", action="store_true",
                            help="report how many classes each stage ranked")

    common(sub.add_parser("check", help="run the reducibility checker"))
    common(sub.add_parser("classes", help="list class representatives with ranks"))
    common(sub.add_parser("validate", help="parse and validate pattern files"), with_run=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(message)s")
    if args.command != "validate" and not args.paths and not args.builtin:
        parser.error(f"{args.command}: select at least one pattern file or --builtin")

    handler = {"check": cmd_check, "classes": cmd_classes, "validate": cmd_validate}[args.command]
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        return handler(args, out)
    except OracleMismatch as exc:
        print(f"oracle mismatch: {exc}", file=sys.stderr)
        return EXIT_ORACLE_MISMATCH
    finally:
        if args.out:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
