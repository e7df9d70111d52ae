"""Collections whose element order exists but must not be relied upon.

Every :class:`Disord` carries a provenance token.  Two collections with the
same token are guaranteed to list their items in the same hidden order, so
elementwise work between them is meaningful; anything else is refused with
:class:`~frab.errors.DisciplineError`.  A collection of length one is
consistent with everything and broadcasts.
"""

import operator
import secrets

from . import _format
from .errors import DisciplineError, LengthMismatch

__all__ = [
    "Disord",
    "DisIndex",
    "new_token",
    "disord_new",
    "consistent",
    "map_elementwise",
    "zip_elementwise",
    "filter_by",
    "get_by_position",
]


def new_token():
    """Fresh 160-bit provenance token as 40 hex digits."""
    return secrets.token_hex(20)


def _make(items, token, cls=None):
    items = tuple(items)
    if cls is None:
        cls = DisIndex if items and all(isinstance(x, bool) for x in items) else Disord
    obj = object.__new__(cls)
    obj._items = items
    obj._token = token
    return obj


class Disord:
    __slots__ = ("_items", "_token")

    def __init__(self, values=()):
        self._items = tuple(values)
        self._token = new_token()

    @property
    def token(self):
        return self._token

    def elements(self):
        """Items as a list, in the hidden order.

        This is the escape hatch: anything positional done with the result
        is the caller's responsibility.
        """
        return list(self._items)

    def __len__(self):
        return len(self._items)

    def __contains__(self, item):
        return item in self._items

    __iter__ = None

    def __getitem__(self, key):
        if isinstance(key, Disord):
            return filter_by(self, key)
        return get_by_position(self, key)

    def __eq__(self, other):
        if not isinstance(other, Disord):
            return NotImplemented
        return self._token == other._token and self._items == other._items

    def __hash__(self):
        return hash((self._token, self._items))

    def map(self, f):
        return map_elementwise(self, f)

    def _binary(self, other, op):
        if isinstance(other, Disord):
            return zip_elementwise(self, other, op)
        return map_elementwise(self, lambda x: op(x, other))

    def _rbinary(self, other, op):
        return map_elementwise(self, lambda x: op(other, x))

    def __add__(self, other):
        return self._binary(other, operator.add)

    def __radd__(self, other):
        return self._rbinary(other, operator.add)

    def __sub__(self, other):
        return self._binary(other, operator.sub)

    def __rsub__(self, other):
        return self._rbinary(other, operator.sub)

    def __mul__(self, other):
        return self._binary(other, operator.mul)

    def __rmul__(self, other):
        return self._rbinary(other, operator.mul)

    def __truediv__(self, other):
        return self._binary(other, operator.truediv)

    def __rtruediv__(self, other):
        return self._rbinary(other, operator.truediv)

    def __pow__(self, other):
        return self._binary(other, operator.pow)

    def __rpow__(self, other):
        return self._rbinary(other, operator.pow)

    def __neg__(self):
        return map_elementwise(self, operator.neg)

    def __abs__(self):
        return map_elementwise(self, abs)

    def __gt__(self, other):
        return self._binary(other, operator.gt)

    def __ge__(self, other):
        return self._binary(other, operator.ge)

    def __lt__(self, other):
        return self._binary(other, operator.lt)

    def __le__(self, other):
        return self._binary(other, operator.le)

    def __repr__(self):
        return f"<{type(self).__name__} of {len(self._items)} with hash {self._token}>"

    def __str__(self):
        lines = [f"A disord object with hash {self._token} and elements"]
        lines += _format.render_vector(self._items)
        lines.append("(in some order)")
        return "\n".join(lines)


class DisIndex(Disord):
    """Boolean Disord, used to select or replace entries by predicate."""

    __slots__ = ()

    def __init__(self, values=()):
        values = tuple(values)
        if not all(isinstance(x, bool) for x in values):
            raise TypeError("DisIndex items must all be bool")
        super().__init__(values)

    def __invert__(self):
        return map_elementwise(self, operator.not_)

    def __and__(self, other):
        return self._binary(other, operator.and_)

    def __or__(self, other):
        return self._binary(other, operator.or_)


def disord_new(values):
    return Disord(values)


def consistent(d1, d2):
    return d1._token == d2._token or len(d1._items) == 1 or len(d2._items) == 1


def map_elementwise(d, f):
    return _make(map(f, d._items), d._token)


def zip_elementwise(d1, d2, f):
    if not consistent(d1, d2):
        raise DisciplineError(
            f"inconsistent collections: hashes {d1._token} and {d2._token}"
        )
    n1, n2 = len(d1._items), len(d2._items)
    if d1._token == d2._token:
        return _make(map(f, d1._items, d2._items), d1._token)
    if n1 == 1 and n2 == 1:
        return _make([f(d1._items[0], d2._items[0])], new_token())
    if n1 == 1:
        x = d1._items[0]
        return _make([f(x, y) for y in d2._items], d2._token)
    y = d2._items[0]
    return _make([f(x, y) for x in d1._items], d1._token)


def filter_by(d, mask):
    """Items of ``d`` where ``mask`` is true; the result gets a fresh token."""
    if not all(isinstance(x, bool) for x in mask._items):
        raise TypeError("mask must hold booleans")
    if not consistent(d, mask):
        raise DisciplineError(
            f"mask hash {mask._token} is inconsistent with {d._token}"
        )
    if len(mask._items) == 1 and len(d._items) != 1:
        keep = d._items if mask._items[0] else ()
    elif len(mask._items) != len(d._items):
        raise LengthMismatch(
            f"mask has {len(mask._items)} items, collection has {len(d._items)}"
        )
    else:
        keep = [x for x, m in zip(d._items, mask._items) if m]
    return _make(keep, new_token())


def get_by_position(d, i):
    raise DisciplineError(
        "positional access is not implemented: the order of elements is undefined"
    )
