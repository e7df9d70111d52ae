"""Two-column ``symbol<TAB>value`` text format.

Output is sorted by symbol and uses the shortest representation that
parses back to the same double.  Input lines go through the same summing
and zero-dropping as :func:`frab.core.from_pairs`, in file order.
"""

import math

from ._format import shortest
from .core import Frab, _canonicalize
from .errors import EmptySymbol, NonFiniteCoefficient, ParseError, SerializationError

__all__ = ["parse_frab_text", "render_frab_text"]


def _parse_number(field, lineno):
    stripped = field.strip()
    if not stripped or "_" in stripped:
        raise ParseError(lineno, f"not a number: {field!r}")
    try:
        v = float(stripped)
    except ValueError:
        raise ParseError(lineno, f"not a number: {field!r}") from None
    if not math.isfinite(v):
        raise NonFiniteCoefficient(v, f"line {lineno}: coefficient is not finite: {field!r}")
    return v


def parse_frab_text(text):
    pairs = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        if line.endswith("\r"):
            line = line[:-1]
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ParseError(lineno, f"expected exactly one TAB, found {len(fields) - 1}")
        symbol, value = fields
        if not symbol:
            raise EmptySymbol(f"line {lineno}: empty symbol")
        pairs.append((symbol, _parse_number(value, lineno)))
    return Frab._wrap(_canonicalize(pairs))


def render_frab_text(f):
    lines = []
    for s, v in f.items():
        if "\t" in s or "\n" in s or "\r" in s:
            raise SerializationError(f"symbol {s!r} contains a TAB or line break")
        lines.append(f"{s}\t{shortest(v)}\n")
    return "".join(lines)
