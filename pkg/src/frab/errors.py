"""Exception hierarchy.

Everything raised deliberately by this package derives from
:class:`FrabError`; the value-related errors also derive from
:class:`ValueError` so callers that only know builtins still catch them.
"""


class FrabError(Exception):
    pass


class EmptySymbol(FrabError, ValueError):
    def __init__(self, msg="symbols must be non-empty strings"):
        super().__init__(msg)


class NonFiniteCoefficient(FrabError, ValueError):
    def __init__(self, value=None, msg=None):
        self.value = value
        if msg is None:
            msg = f"coefficient must be finite, got {value!r}"
        super().__init__(msg)


class NegativeTolerance(FrabError, ValueError):
    pass


class DisciplineError(FrabError):
    """Operation would depend on an order that is not defined."""


class LengthMismatch(FrabError, ValueError):
    pass


class NegativeCount(FrabError, ValueError):
    pass


class NonIntegralCount(FrabError, ValueError):
    pass


class ParseError(FrabError, ValueError):
    def __init__(self, lineno, msg):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}")


class SerializationError(FrabError, ValueError):
    pass
