"""Names/values views of a Frab and the replacement idioms built on them.

Each Frab object is one snapshot: its names and values views share a
provenance token, and any Frab produced from it (even an equal one) gets
a new token on first use.  Feeding a view back into a different snapshot
is a :class:`~frab.errors.DisciplineError`.
"""

import operator

from .core import Frab, _canonicalize, check_coefficient, check_symbol
from .disord import DisIndex, _make
from .errors import DisciplineError, LengthMismatch

__all__ = [
    "names_view",
    "values_view",
    "with_names",
    "with_values",
    "extract_by_symbols",
    "extract_by_position",
    "compare_values",
    "replace_where",
    "replace_by_symbol",
    "RELATIONS",
]

RELATIONS = {
    "<": operator.lt,
    "<=": operator.le,
    "≤": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
    "≥": operator.ge,
    "=": operator.eq,
    "==": operator.eq,
    "!=": operator.ne,
    "≠": operator.ne,
}


def names_view(f):
    return _make(f._data.keys(), f.snapshot_token())


def values_view(f):
    return _make(f._data.values(), f.snapshot_token())


def _aligned(f, d, what):
    """Items of ``d`` lined up with the hidden order of ``f``."""
    n = len(f._data)
    items = d._items
    if d._token != f.snapshot_token() and len(items) != 1 and n != 1:
        raise DisciplineError(
            f"{what} with hash {d._token} was not taken from this frab "
            f"(hash {f.snapshot_token()})"
        )
    if len(items) == n:
        return items
    if len(items) == 1:
        return items * n
    raise LengthMismatch(f"{what} has {len(items)} items, frab has {n} entries")


def with_names(f, new_names):
    """Rename entries; names that collide are summed."""
    names = _aligned(f, new_names, "names")
    return Frab._wrap(_canonicalize(zip(names, f._data.values())))


def with_values(f, new_values):
    values = _aligned(f, new_values, "values")
    return Frab._wrap(_canonicalize(zip(f._data.keys(), values)))


def extract_by_symbols(f, symbols):
    data = f._data
    out = {}
    for s in symbols:
        check_symbol(s)
        if s in data:
            out[s] = data[s]
    return Frab._wrap(out)


def extract_by_position(f, i):
    raise DisciplineError(
        "positional extraction is not implemented: a frab has no first element"
    )


def compare_values(f, relation, threshold):
    """Boolean view of ``value <relation> threshold``, consistent with f's values."""
    try:
        op = RELATIONS[relation]
    except KeyError:
        raise ValueError(f"unknown relation {relation!r}") from None
    t = check_coefficient(threshold)
    return _make((op(v, t) for v in f._data.values()), f.snapshot_token(), DisIndex)


def replace_where(f, mask, value):
    """Set every coefficient selected by ``mask`` to ``value``."""
    value = check_coefficient(value)
    flags = _aligned(f, mask, "mask")
    if not all(isinstance(m, bool) for m in flags):
        raise TypeError("mask must hold booleans")
    out = {}
    for (k, v), m in zip(f._data.items(), flags):
        if m:
            v = value
        if v != 0.0:
            out[k] = v
    return Frab._wrap(out)


def replace_by_symbol(f, symbol, value):
    check_symbol(symbol)
    value = check_coefficient(value)
    out = dict(f._data)
    if value == 0.0:
        out.pop(symbol, None)
    else:
        out[symbol] = value
    return Frab._wrap(out)
