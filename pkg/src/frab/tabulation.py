"""Counting tokens into Frabs.

Adding two count tables is the group addition, which is the same as
tabulating the concatenated token streams.
"""

from collections import Counter

from .core import Frab, add, check_symbol
from .errors import NegativeCount, NonIntegralCount

__all__ = ["tabulate", "merge_counts", "reconstruct", "read_tokens", "INTEGRAL_TOL"]

INTEGRAL_TOL = 1e-9


def tabulate(tokens):
    counts = Counter(tokens)
    for s in counts:
        check_symbol(s)
    return Frab._wrap({s: float(n) for s, n in counts.items()})


merge_counts = add


def reconstruct(f):
    """Expand a count table back into a sorted token list.

    Coefficients within ``INTEGRAL_TOL`` of an integer are rounded first;
    negative or non-integral counts cannot be expanded.
    """
    out = []
    for s, v in f.items():
        if v < 0:
            raise NegativeCount(f"cannot expand negative entry {s!r}: {v!r}")
        n = round(v)
        if abs(v - n) > INTEGRAL_TOL:
            raise NonIntegralCount(f"cannot expand non-integral entry {s!r}: {v!r}")
        out.extend([s] * n)
    return out


def read_tokens(text):
    """Split a token file on runs of whitespace."""
    return text.split()
