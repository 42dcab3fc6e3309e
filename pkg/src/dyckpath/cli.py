"""Command-line interface: ``dyck <subcommand> ...``.

Exit codes: 0 success, 1 invalid word or point set, 2 usage error.
Point sets are written ``x1,y1;x2,y2;...``.  Any positional argument
given as ``-`` is read from stdin.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from functools import lru_cache
from typing import Any, Final

from dyckpath.core import (
    DyckWord,
    alphabet_from_pair,
    factorize,
    parse_word,
    peaks,
    valleys,
)
from dyckpath.enumeration import MAX_SEMILENGTH, catalan, enumerate_words
from dyckpath.errors import DyckError, InvalidPeakSet, InvalidValleySet, ParseError
from dyckpath.grid import encode_peak_set, peaks_modified, valleys_modified
from dyckpath.reconstruct import word_from_peaks, word_from_valleys
from dyckpath.render import render

EXIT_OK: Final = 0
EXIT_INVALID: Final = 1
EXIT_USAGE: Final = 2

ENVELOPE_KEYS: Final = ("word", "semilength", "peaks", "valleys", "fragments", "modified", "codes")


class PointSetSyntaxError(DyckError):
    pass


def format_points(points: Sequence[Sequence[int]]) -> str:
    return ";".join(f"{x},{y}" for x, y in points)


def parse_points(text: str) -> list[tuple[int, int]]:
    """Parse ``"x1,y1;x2,y2"``; whitespace is ignored and one trailing ``;`` is allowed."""
    body = "".join(text.split())
    if body.endswith(";"):
        body = body[:-1]
    if not body:
        return []
    points = []
    for chunk in body.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise PointSetSyntaxError(f"expected 'x,y', got {chunk!r}")
        try:
            points.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise PointSetSyntaxError(f"non-integer coordinate in {chunk!r}") from None
    return points


def envelope(**fields: Any) -> str:
    """Canonical JSON: fixed key order, compact separators, points as arrays."""
    unknown = set(fields) - set(ENVELOPE_KEYS)
    if unknown:
        raise KeyError(f"unknown envelope keys: {sorted(unknown)}")
    obj = {key: fields[key] for key in ENVELOPE_KEYS if key in fields}
    for key in ("peaks", "valleys", "modified"):
        if key in obj:
            obj[key] = [[x, y] for x, y in obj[key]]
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def _read_arg(value: str) -> str:
    if value == "-":
        return sys.stdin.read().strip()
    return value


def _word(args: argparse.Namespace) -> DyckWord:
    alphabet = alphabet_from_pair(args.alphabet)
    return parse_word(_read_arg(args.word), alphabet)


def _emit(args: argparse.Namespace, text: str, **fields: Any) -> int:
    print(envelope(**fields) if args.json else text)
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    w = _word(args)
    return _emit(args, f"Ok! semilength {w.semilength}", word=str(w), semilength=w.semilength)


def cmd_factorize(args: argparse.Namespace) -> int:
    w = _word(args)
    frags = [str(f) for f in factorize(w)]
    return _emit(args, "-".join(frags), word=str(w), semilength=w.semilength, fragments=frags)


def cmd_peaks(args: argparse.Namespace) -> int:
    w = _word(args)
    ps = peaks(w)
    return _emit(args, format_points(ps), word=str(w), semilength=w.semilength, peaks=ps)


def cmd_valleys(args: argparse.Namespace) -> int:
    w = _word(args)
    vs = valleys(w, include_terminal=args.terminal)
    return _emit(args, format_points(vs), word=str(w), semilength=w.semilength, valleys=vs)


def cmd_modify(args: argparse.Namespace) -> int:
    w = _word(args)
    if args.what == "peaks":
        ms = peaks_modified(w)
    else:
        ms = valleys_modified(w, include_terminal=args.terminal)
    return _emit(args, format_points(ms), word=str(w), semilength=w.semilength, modified=ms)


def cmd_encode(args: argparse.Namespace) -> int:
    w = _word(args)
    codes = encode_peak_set(w)
    return _emit(args, ",".join(map(str, codes)), word=str(w), semilength=w.semilength, codes=codes)


def cmd_from_peaks(args: argparse.Namespace) -> int:
    ps = parse_points(_read_arg(args.points))
    w = word_from_peaks(ps)
    return _emit(args, str(w), word=str(w), semilength=w.semilength, peaks=ps)


def cmd_from_valleys(args: argparse.Namespace) -> int:
    vs = parse_points(_read_arg(args.points))
    w = word_from_valleys(vs)
    return _emit(args, str(w), word=str(w), semilength=w.semilength, valleys=vs)


def cmd_enumerate(args: argparse.Namespace) -> int:
    out = sys.stdout
    for i, w in enumerate(enumerate_words(args.n)):
        if args.limit is not None and i >= args.limit:
            break
        out.write(f"{w}\n")
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    print(catalan(args.n))
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    drawing = render(_word(args))
    if drawing:
        print(drawing)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyck",
        description="Validate, factorize and reconstruct Dyck words.",
        epilog=(
            "Point sets use 'x1,y1;x2,y2;...'. Codes use Cantor pairing "
            "(xm+y)(xm+y+1)/2 + y on condensed peaks (xm, y), xm = (x-y)/2."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    word_opts = argparse.ArgumentParser(add_help=False)
    word_opts.add_argument("word", help="Dyck word, or '-' to read stdin")
    word_opts.add_argument(
        "--alphabet",
        default="ud",
        help="two characters for up and down steps, e.g. '()' (default: ud)",
    )
    json_opt = argparse.ArgumentParser(add_help=False)
    json_opt.add_argument("--json", action="store_true", help="print a JSON envelope")
    terminal_opt = argparse.ArgumentParser(add_help=False)
    terminal_opt.add_argument(
        "--terminal",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="include the end point (2n,0) among valleys (default: on)",
    )

    def add(name: str, func, help_text: str, parents=()) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, parents=list(parents))
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check a word and print its semilength", [word_opts, json_opt])
    add("factorize", cmd_factorize, "split into prime fragments", [word_opts, json_opt])
    add("peaks", cmd_peaks, "list peaks", [word_opts, json_opt])
    add("valleys", cmd_valleys, "list valleys", [word_opts, json_opt, terminal_opt])
    p = add("modify", cmd_modify, "peaks or valleys in condensed coordinates", [word_opts, json_opt, terminal_opt])
    p.add_argument("--what", choices=("peaks", "valleys"), default="peaks")
    add("encode", cmd_encode, "Cantor-pair each condensed peak", [word_opts, json_opt])
    add("render", cmd_render, "draw the path in ASCII", [word_opts])

    for name, func, what in (
        ("from-peaks", cmd_from_peaks, "peak"),
        ("from-valleys", cmd_from_valleys, "valley"),
    ):
        p = add(name, func, f"rebuild the word from its {what} set", [json_opt])
        p.add_argument("points", help="point set 'x,y;x,y;...', or '-' to read stdin")

    p = add("enumerate", cmd_enumerate, f"list all words of semilength n (n <= {MAX_SEMILENGTH})")
    p.add_argument("n", type=nonneg_int)
    p.add_argument("--limit", type=nonneg_int, default=None, help="stop after this many words")
    p = add("count", cmd_count, "print the Catalan number C(n)")
    p.add_argument("n", type=nonneg_int)
    return parser


@lru_cache(maxsize=1)
def _parser() -> argparse.ArgumentParser:
    return build_parser()


def main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        alphabet = getattr(args, "alphabet", "ud")
        alphabet_from_pair(alphabet)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        return args.func(args)
    except (InvalidPeakSet, InvalidValleySet) as exc:
        print(f"error: {exc.report}", file=sys.stderr)
        return EXIT_INVALID
    except ParseError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except DyckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BrokenPipeError:
        sys.stderr.close()
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
