"""Command-line front end.

Exit status is 0 on success, 1 when ``eq`` finds its inputs different and
2 on any usage, parse or precondition error.  Every file argument accepts
``-`` for standard input.
"""

import argparse
import sys

from .core import check_coefficient, scalar_multiply, subtract, sum_of, zap
from .errors import FrabError
from .tabulation import read_tokens, reconstruct, tabulate
from .textio import parse_frab_text, render_frab_text


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path):
    try:
        return parse_frab_text(_read(path))
    except FrabError as exc:
        raise FrabError(f"{path}: {exc}") from exc


def _number(text):
    try:
        return check_coefficient(float(text))
    except (ValueError, FrabError):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}") from None


def cmd_tabulate(args):
    return render_frab_text(tabulate(read_tokens(_read(args.tokenfile))))


def cmd_add(args):
    return render_frab_text(sum_of(_load(p) for p in args.files))


def cmd_sub(args):
    return render_frab_text(subtract(_load(args.file1), _load(args.file2)))


def cmd_scale(args):
    return render_frab_text(scalar_multiply(_load(args.file), args.factor))


def cmd_zap(args):
    return render_frab_text(zap(_load(args.file), args.tol))


def cmd_show(args):
    return str(_load(args.file)) + "\n"


def cmd_reconstruct(args):
    return "".join(s + "\n" for s in reconstruct(_load(args.file)))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="frab",
        description="Arithmetic on formal sums of symbols stored as symbol<TAB>value files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tabulate", help="count whitespace-separated tokens")
    p.add_argument("tokenfile")
    p.set_defaults(func=cmd_tabulate)

    p = sub.add_parser("add", help="sum of all inputs")
    p.add_argument("files", nargs="+", metavar="file")
    p.set_defaults(func=cmd_add)

    p = sub.add_parser("sub", help="file1 minus file2")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_sub)

    p = sub.add_parser("scale", help="multiply every entry by a factor")
    p.add_argument("factor", type=_number)
    p.add_argument("file")
    p.set_defaults(func=cmd_scale)

    p = sub.add_parser("zap", help="drop entries with |value| <= tol")
    p.add_argument("--tol", type=_number, required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_zap)

    p = sub.add_parser("show", help="print in display format")
    p.add_argument("file")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("eq", help="exit 0 if equal, 1 otherwise")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=None)

    p = sub.add_parser("reconstruct", help="expand counts into tokens, one per line")
    p.add_argument("file")
    p.set_defaults(func=cmd_reconstruct)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "eq":
            return 0 if _load(args.file1) == _load(args.file2) else 1
        out = args.func(args)
    except (FrabError, OSError, UnicodeDecodeError) as exc:
        print(f"frab {args.command}: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
