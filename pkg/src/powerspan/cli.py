"""Command-line front end.

Collections are written ``d:[a_0,a_1,...,a_k]``, e.g. ``2:[3,2,0]``.

Exit status: 0 on success, 1 for ``eq --status`` on unequal spans, 2 for
parse and usage errors, 3 for domain errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional, Sequence

from . import oracle, span
from .core import DCollection, DomainError, InvalidCollection, normalize

EXIT_UNEQUAL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

_TOKEN = re.compile(r"\s*(?:(-?\d+)|(\S))")


class LiteralError(ValueError):
    def __init__(self, text: str, pos: int, message: str):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.pos = pos


def parse_collection(text: str) -> DCollection:
    """Parse ``d:[a_0,...,a_k]``; whitespace inside the brackets is ignored."""
    m = re.match(r"(\d+):\[", text)
    if not m:
        pos = 0
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == 0:
            raise LiteralError(text, 0, "expected base")
        raise LiteralError(text, pos, "expected ':['")
    base = int(m.group(1))
    if base < 2:
        raise LiteralError(text, 0, f"base must be at least 2, got {base}")
    pos = m.end()
    mults: List[int] = []
    expect_value = True
    while True:
        tok = _TOKEN.match(text, pos)
        if tok is None:
            raise LiteralError(text, len(text), "missing ']'")
        start = tok.start(1) if tok.group(1) is not None else tok.start(2)
        if tok.group(1) is not None:
            if not expect_value:
                raise LiteralError(text, start, "expected ',' or ']'")
            value = int(tok.group(1))
            if value < 0:
                raise LiteralError(text, start, f"negative multiplicity {value}")
            mults.append(value)
            expect_value = False
        elif tok.group(2) == "," and not expect_value:
            expect_value = True
        elif tok.group(2) == "]" and (not expect_value or not mults):
            if text[tok.end():]:
                raise LiteralError(text, tok.end(), "trailing characters")
            break
        else:
            raise LiteralError(text, start, f"unexpected {tok.group(2)!r}")
        pos = tok.end()
    return DCollection(base, tuple(mults))


def format_collection(A: DCollection) -> str:
    return f"{A.base}:[{','.join(str(a) for a in A.mults)}]"


def _collection_arg(text: str) -> DCollection:
    try:
        return parse_collection(text)
    except (LiteralError, InvalidCollection) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _positive(text: str) -> int:
    value = _nonnegative(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive: 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON object per invocation")

    parser = argparse.ArgumentParser(
        prog="powerspan", parents=[common],
        description="Subset sums of multisets of powers of a fixed base.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="print the normal form")
    p.add_argument("collection", type=_collection_arg)

    p = sub.add_parser("eq", parents=[common], help="decide span equality")
    p.add_argument("first", type=_collection_arg)
    p.add_argument("second", type=_collection_arg)
    p.add_argument("--status", action="store_true", help="exit 1 when the spans differ")

    p = sub.add_parser("member", parents=[common], help="decide whether n is a subset sum")
    p.add_argument("collection", type=_collection_arg)
    p.add_argument("n", type=_nonnegative)

    p = sub.add_parser("mex", parents=[common], help="smallest value that is not a subset sum")
    p.add_argument("collection", type=_collection_arg)

    p = sub.add_parser("size", parents=[common], help="number of distinct subset sums")
    p.add_argument("collection", type=_collection_arg)

    p = sub.add_parser("decompose", parents=[common], help="irreducible blocks of the normal form")
    p.add_argument("collection", type=_collection_arg)

    p = sub.add_parser("enumerate", parents=[common], help="smallest subset sums in order")
    p.add_argument("collection", type=_collection_arg)
    p.add_argument("--limit", type=_positive, required=True)

    p = sub.add_parser("exchange-check", parents=[common],
                       help="does exchanging d tokens at place i keep the span?")
    p.add_argument("collection", type=_collection_arg)
    p.add_argument("i", type=_nonnegative)

    p = sub.add_parser("oracle", parents=[common], help="brute-force equivalents")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("span", parents=[common])
    q.add_argument("collection", type=_collection_arg)
    q = osub.add_parser("eq", parents=[common])
    q.add_argument("first", type=_collection_arg)
    q.add_argument("second", type=_collection_arg)
    q.add_argument("--status", action="store_true")
    q = osub.add_parser("member", parents=[common])
    q.add_argument("collection", type=_collection_arg)
    q.add_argument("n", type=_nonnegative)
    return parser


def _execute(args: argparse.Namespace):
    """Return ``(name, result, lines, status)`` for a parsed command line."""
    cmd = args.command
    if cmd == "normalize":
        text = format_collection(normalize(args.collection))
        return cmd, text, [text], 0
    if cmd == "eq":
        equal = span.span_equal(args.first, args.second)
        return cmd, equal, [_bool(equal)], EXIT_UNEQUAL if args.status and not equal else 0
    if cmd == "member":
        found = span.contains(args.collection, args.n)
        return cmd, found, [_bool(found)], 0
    if cmd == "mex":
        value = span.mex(args.collection)
        return cmd, value, [str(value)], 0
    if cmd == "size":
        value = span.span_size(args.collection)
        return cmd, value, [str(value)], 0
    if cmd == "decompose":
        blocks = span.decompose(args.collection).blocks
        result = [{"shift": b.shift, "top": b.top, "sum": b.block_sum, "len": b.length}
                  for b in blocks]
        lines = [f"shift={b['shift']} top={b['top']} sum={b['sum']} len={b['len']}"
                 for b in result]
        return cmd, result, lines, 0
    if cmd == "enumerate":
        values = span.enumerate_span(args.collection, args.limit)
        return cmd, values, [str(v) for v in values], 0
    if cmd == "exchange-check":
        word = "preserves" if span.exchange_preserves_span(args.collection, args.i) else "changes"
        return cmd, word, [word], 0

    name = f"oracle {args.oracle_command}"
    if args.oracle_command == "span":
        values = list(oracle.oracle_span(args.collection))
        return name, values, [str(v) for v in values], 0
    if args.oracle_command == "eq":
        equal = oracle.oracle_equal(args.first, args.second)
        return name, equal, [_bool(equal)], EXIT_UNEQUAL if args.status and not equal else 0
    found = oracle.oracle_contains(args.collection, args.n)
    return name, found, [_bool(found)], 0


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        name, result, lines, status = _execute(args)
    except DomainError as exc:
        print(f"powerspan: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if getattr(args, "json", False):
        sys.stdout.write(json.dumps({"command": name, "result": result}) + "\n")
    else:
        for line in lines:
            sys.stdout.write(line + "\n")
    return status


def main() -> None:
    sys.exit(run())
