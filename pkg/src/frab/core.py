"""Elements of the free Abelian group on string symbols.

A :class:`Frab` is a finite map from non-empty strings to nonzero finite
floats.  Coefficients are doubles rather than integers, so the integer
group laws hold exactly only while magnitudes stay below 2**53.  Repeated
symbols are summed and exact zeros are dropped at every construction; no
tolerance is ever applied implicitly (see :func:`zap` for that).
"""

import math
import threading
from numbers import Real

from . import _format
from .disord import new_token
from .errors import EmptySymbol, NegativeTolerance, NonFiniteCoefficient

__all__ = [
    "Frab",
    "from_pairs",
    "add",
    "sum_of",
    "negate",
    "subtract",
    "scalar_multiply",
    "coefficient_of",
    "equals",
    "support_size",
    "zap",
]

_token_lock = threading.Lock()


def check_symbol(s):
    if not isinstance(s, str):
        raise TypeError(f"symbol must be str, not {type(s).__name__}")
    if not s:
        raise EmptySymbol()
    return s


def check_coefficient(v):
    if type(v) is not float:
        if not isinstance(v, Real) or isinstance(v, bool):
            raise TypeError(f"coefficient must be a real number, not {type(v).__name__}")
        try:
            v = float(v)
        except OverflowError:
            raise NonFiniteCoefficient(v) from None
    if v - v != 0.0:
        raise NonFiniteCoefficient(v)
    return v


def _checked_finite(data):
    for k, v in data.items():
        if v - v != 0.0:
            raise NonFiniteCoefficient(v, f"coefficient of {k!r} is not finite: {v!r}")
    return data


class Frab:
    """Immutable formal linear combination of symbols.

    >>> Frab([("t", 3), ("q", 2), ("t", 4), ("q", -1), ("p", 6), ("a", 3), ("t", 5)])
    Frab({'a': 3, 'p': 6, 'q': 1, 't': 12})

    ``Frab(mapping)``, ``Frab(pairs)`` and ``Frab(x=1, y=2)`` are all
    accepted; the keyword form is appended after any positional data.
    """

    __slots__ = ("_data", "_token", "_hash")

    def __init__(self, data=(), /, **kwargs):
        if isinstance(data, Frab) and not kwargs:
            canon = data._data
        else:
            if hasattr(data, "items"):
                data = data.items()
            pairs = list(data)
            if kwargs:
                pairs.extend(kwargs.items())
            canon = _canonicalize(pairs)
        self._data = canon
        self._token = None
        self._hash = None

    @classmethod
    def _wrap(cls, canon):
        # canon must already satisfy the invariants
        obj = cls.__new__(cls)
        obj._data = canon
        obj._token = None
        obj._hash = None
        return obj

    # -- algebra ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Frab):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, Frab):
            return NotImplemented
        return subtract(self, other)

    def __neg__(self):
        return negate(self)

    def __pos__(self):
        return Frab._wrap(self._data)

    def __mul__(self, s):
        if isinstance(s, Frab) or not isinstance(s, Real):
            return NotImplemented
        return scalar_multiply(self, s)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Frab):
            return NotImplemented
        return self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._data.items()))
        return self._hash

    # -- comparisons against a scalar give an unordered boolean mask ------

    def __gt__(self, threshold):
        return self._compare(">", threshold)

    def __ge__(self, threshold):
        return self._compare(">=", threshold)

    def __lt__(self, threshold):
        return self._compare("<", threshold)

    def __le__(self, threshold):
        return self._compare("<=", threshold)

    def _compare(self, rel, threshold):
        if isinstance(threshold, Frab) or not isinstance(threshold, Real):
            return NotImplemented
        from .views import compare_values
        return compare_values(self, rel, threshold)

    # -- container protocol ----------------------------------------------

    def __len__(self):
        return len(self._data)

    def __bool__(self):
        return bool(self._data)

    def __contains__(self, symbol):
        return symbol in self._data

    # entries have no defined order, so plain iteration is refused
    __iter__ = None

    def __getitem__(self, key):
        from . import views
        if isinstance(key, str):
            return views.extract_by_symbols(self, (key,))
        if isinstance(key, (int, slice)):
            return views.extract_by_position(self, key)
        if isinstance(key, (list, tuple, set, frozenset)):
            return views.extract_by_symbols(self, key)
        raise TypeError(f"cannot index a Frab with {type(key).__name__}")

    # -- accessors with a defined (sorted) order --------------------------

    def coef(self, symbol):
        return coefficient_of(self, symbol)

    def symbols(self):
        return sorted(self._data)

    def items(self):
        return sorted(self._data.items())

    def to_dict(self):
        return dict(self.items())

    def total(self):
        return math.fsum(self._data.values())

    # -- views and replacement -------------------------------------------

    def snapshot_token(self):
        """Provenance token shared by every view taken from this object."""
        if self._token is None:
            with _token_lock:
                if self._token is None:
                    self._token = new_token()
        return self._token

    def names(self):
        from .views import names_view
        return names_view(self)

    def values(self):
        from .views import values_view
        return values_view(self)

    def with_names(self, new_names):
        from .views import with_names
        return with_names(self, new_names)

    def with_values(self, new_values):
        from .views import with_values
        return with_values(self, new_values)

    def replace(self, mask, value):
        from .views import replace_where
        return replace_where(self, mask, value)

    def set(self, symbol, value):
        from .views import replace_by_symbol
        return replace_by_symbol(self, symbol, value)

    def zap(self, tol):
        return zap(self, tol)

    # -- display ---------------------------------------------------------

    def __repr__(self):
        body = ", ".join(f"{k!r}: {_format.shortest(v)}" for k, v in self.items())
        return f"Frab({{{body}}})"

    def __str__(self):
        if not self._data:
            return "A frab object with no entries"
        names, values = zip(*self.items())
        return "\n".join(["A frab object with entries", *_format.render_named(names, values)])


def _canonicalize(pairs):
    acc = {}
    get = acc.get
    for s, v in pairs:
        if type(s) is not str:
            check_symbol(s)
        if not s:
            raise EmptySymbol()
        if type(v) is not float:
            v = check_coefficient(v)
        elif v - v != 0.0:
            raise NonFiniteCoefficient(v)
        # left-to-right accumulation fixes the rounding of repeated symbols
        acc[s] = get(s, 0.0) + v
    _checked_finite(acc)
    return {k: v for k, v in acc.items() if v != 0.0}


def from_pairs(pairs):
    """Build a Frab from ``(symbol, coefficient)`` pairs, summing repeats."""
    return Frab._wrap(_canonicalize(pairs))


def add(a, b):
    big, small = (a._data, b._data) if len(a._data) >= len(b._data) else (b._data, a._data)
    out = dict(big)
    for k, v in small.items():
        if k in out:
            s = out[k] + v
            if s == 0.0:
                del out[k]
            elif s - s != 0.0:
                raise NonFiniteCoefficient(s, f"coefficient of {k!r} overflowed")
            else:
                out[k] = s
        else:
            out[k] = v
    return Frab._wrap(out)


def sum_of(frabs):
    """Group sum of any number of Frabs, folded left to right."""
    total = Frab()
    for f in frabs:
        total = add(total, f)
    return total


def negate(a):
    return Frab._wrap({k: -v for k, v in a._data.items()})


def subtract(a, b):
    return add(a, negate(b))


def scalar_multiply(a, s):
    s = check_coefficient(s)
    if s == 0.0:
        return Frab._wrap({})
    if s == 1.0:
        return Frab._wrap(a._data)
    out = {k: v * s for k, v in a._data.items()}
    _checked_finite(out)
    return Frab._wrap({k: v for k, v in out.items() if v != 0.0})


def coefficient_of(a, symbol):
    """Stored coefficient of ``symbol``, or 0.0 if it is not in the support."""
    return a._data.get(check_symbol(symbol), 0.0)


def equals(a, b):
    return a._data == b._data


def support_size(a):
    return len(a._data)


def zap(a, tol):
    """Drop entries whose magnitude is at most ``tol``."""
    tol = check_coefficient(tol)
    if tol < 0:
        raise NegativeTolerance(f"tolerance must be nonnegative, got {tol!r}")
    return Frab._wrap({k: v for k, v in a._data.items() if abs(v) > tol})
