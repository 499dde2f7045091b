"""Command-line front end.

Exit codes: 0 success / hypothesis holds, 1 counterexample or violation
found, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from typing import Sequence

from . import compatibility, patterns, shuffles
from .perm_core import Cycle, Word, as_word, format_word, standardize
from .stats import (
    ALL_STATS,
    CYCLIC_STATS,
    LINEAR_STATS,
    distribution,
    encode_distribution,
    encode_value,
    format_multiset,
    format_value,
    stat,
)


class UsageError(Exception):
    pass


def parse_perm(text: str) -> Word:
    """Parse ``"4,2,1,8"`` or the digit shorthand ``"4218"``; ``""`` is the empty word."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        tokens = [t.strip() for t in text.split(",")]
    elif text.isdigit():
        tokens = list(text)
    else:
        tokens = [text]
    entries = []
    for tok in tokens:
        if not tok.isdigit() or int(tok) < 1:
            raise UsageError(f"invalid entry {tok!r} in {text!r}: expected a positive integer")
        entries.append(int(tok))
    seen = set()
    for x in entries:
        if x in seen:
            raise UsageError(f"duplicate entry {x!r} in {text!r}")
        seen.add(x)
    return as_word(entries)


def parse_cycle(text: str) -> Cycle:
    w = parse_perm(text)
    if not w:
        raise UsageError("a cyclic permutation must be nonempty")
    return Cycle(w)


def dumps(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True)


def _perm_json(x) -> list[int]:
    return list(x.word) if isinstance(x, Cycle) else list(x)


def _emit(payload: dict, fmt: str, table: str, start: float) -> None:
    if fmt == "json":
        payload["elapsed_ms"] = int((time.perf_counter() - start) * 1000)
        print(dumps(payload))
    else:
        print(table)


# -- commands ------------------------------------------------------------------


def cmd_stat(args, start: float) -> int:
    if args.kind in CYCLIC_STATS and not args.cyclic:
        raise UsageError(f"{args.kind} is a cyclic statistic; pass --cyclic")
    if args.kind in LINEAR_STATS and args.cyclic:
        raise UsageError(f"{args.kind} is a linear statistic; drop --cyclic")
    perm = parse_cycle(args.perm) if args.cyclic else parse_perm(args.perm)
    value = stat(args.kind, perm)
    payload = {
        "command": "stat",
        "inputs": {"kind": args.kind, "perm": _perm_json(perm), "cyclic": args.cyclic},
        "result": encode_value(value),
    }
    _emit(payload, args.format or "table", format_value(value), start)
    return 0


def cmd_shuffle(args, start: float) -> int:
    if args.cyclic:
        left, right = parse_cycle(args.left), parse_cycle(args.right)
        elements = sorted(shuffles.cyclic_shuffles(left, right))
        lines = [str(c) for c in elements]
    else:
        left, right = parse_perm(args.left), parse_perm(args.right)
        elements = sorted(shuffles.linear_shuffles(left, right))
        lines = [format_word(w) for w in elements]
    inputs = {
        "left": _perm_json(left),
        "right": _perm_json(right),
        "cyclic": args.cyclic,
        "stat": args.stat,
    }
    if args.stat is not None:
        if (args.stat in CYCLIC_STATS) != args.cyclic:
            raise UsageError(f"statistic {args.stat} does not match the shuffle kind")
        dist = distribution(args.stat, elements)
        payload = {"command": "shuffle", "inputs": inputs, "result": encode_distribution(dist)}
        _emit(payload, args.format or "table", format_multiset(dist), start)
        return 0
    payload = {
        "command": "shuffle",
        "inputs": inputs,
        "result": [_perm_json(x) for x in elements],
    }
    _emit(payload, args.format or "table", "\n".join(lines), start)
    return 0


def _report_table(d: dict) -> str:
    return "\n".join(f"{k}: {json.dumps(v)}" for k, v in d.items())


def cmd_verify(args, start: float) -> int:
    if args.max < 2:
        raise UsageError("--max must be at least 2")
    if args.stat in CYCLIC_STATS:
        report = compatibility.check_cyclic_compat(
            args.stat, args.max, method=args.method, jobs=args.jobs
        )
    else:
        report = compatibility.check_linear_compat(args.stat, args.max, jobs=args.jobs)
    result = report.to_dict()
    payload = {
        "command": "verify",
        "inputs": {"stat": args.stat, "max_total": args.max},
        "result": result,
        "verdict": report.verdict,
        "counterexample": result["counterexample"],
    }
    _emit(payload, args.format or "json", _report_table(result), start)
    return 0 if report.compatible else 1


def cmd_lifting(args, start: float) -> int:
    if args.cstat not in CYCLIC_STATS:
        raise UsageError(f"--cstat must be cyclic, got {args.cstat}")
    if args.stat not in LINEAR_STATS:
        raise UsageError(f"--stat must be linear, got {args.stat}")
    report = compatibility.check_lifting(args.cstat, args.stat, args.cond, args.max)
    result = report.to_dict()
    payload = {
        "command": "lifting",
        "inputs": {
            "cstat": args.cstat,
            "stat": args.stat,
            "condition": args.cond,
            "bound": args.max,
        },
        "result": result,
        "verdict": report.verdict,
        "counterexample": result["violation"],
    }
    _emit(payload, args.format or "json", _report_table(result), start)
    return 0 if report.holds else 1


def cmd_avoid(args, start: float) -> int:
    if args.n < 1:
        raise UsageError("--n must be positive")
    pats = [parse_cycle(p) for p in args.patterns]
    for p in pats:
        if not patterns.is_standard(p):
            std = Cycle(standardize(p.word))
            raise UsageError(f"pattern {p} is not standardized; did you mean {std}?")
    inputs = {"n": args.n, "patterns": [_perm_json(p) for p in pats], "poly": args.poly}
    if args.poly:
        coeffs = list(patterns.avoidance_poly(args.n, pats).coeffs)
        payload = {"command": "avoid", "inputs": inputs, "result": coeffs}
        _emit(payload, args.format or "table", json.dumps(coeffs, separators=(",", ":")), start)
    else:
        count = len(patterns.avoiders(args.n, pats))
        payload = {"command": "avoid", "inputs": inputs, "result": count}
        _emit(payload, args.format or "table", str(count), start)
    return 0


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclicshuffle",
        description="Permutation statistics, shuffle sets and shuffle-compatibility checks.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "table"), default=None)

    p = sub.add_parser("stat", help="evaluate a statistic on one permutation")
    p.add_argument("--kind", required=True, choices=ALL_STATS)
    p.add_argument("--perm", required=True, help='e.g. "4,2,1,8,5,9,6" or "4218596"')
    p.add_argument("--cyclic", action="store_true", help="treat --perm as a cyclic permutation")
    add_format(p)
    p.set_defaults(func=cmd_stat)

    p = sub.add_parser("shuffle", help="list a shuffle set or its distribution")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--cyclic", action="store_true")
    p.add_argument("--stat", choices=ALL_STATS, default=None)
    add_format(p)
    p.set_defaults(func=cmd_shuffle)

    p = sub.add_parser("verify", help="exhaustively check shuffle compatibility")
    p.add_argument("--stat", required=True, choices=ALL_STATS)
    p.add_argument("--max", type=int, default=7, help="largest total length m+n")
    p.add_argument("--method", choices=compatibility.COMPAT_METHODS, default="bc",
                   help="reduction used for cyclic statistics")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lifting", help="check a lifting hypothesis for a statistic pair")
    p.add_argument("--cstat", required=True, choices=ALL_STATS)
    p.add_argument("--stat", required=True, choices=ALL_STATS)
    p.add_argument("--cond", required=True, choices=("a", "b"))
    p.add_argument("--max", type=int, default=6)
    add_format(p)
    p.set_defaults(func=cmd_lifting)

    p = sub.add_parser("avoid", help="count cyclic permutations avoiding patterns")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--patterns", nargs="*", default=[], help='patterns such as "1,2,3" "1,3,2,4"')
    p.add_argument("--poly", action="store_true", help="print cdes polynomial coefficients")
    add_format(p)
    p.set_defaults(func=cmd_avoid)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    start = time.perf_counter()
    try:
        return args.func(args, start)
    except (UsageError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
