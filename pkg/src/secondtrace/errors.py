"""Exception hierarchy shared by every module."""


class SecondTraceError(Exception):
    """Base class for library errors."""


class ParseError(SecondTraceError, ValueError):
    pass


class FieldMismatchError(SecondTraceError, TypeError):
    """Operands live in different fields."""


class UnsupportedFieldError(SecondTraceError):
    """The operation is not available for this field tower."""


class InseparableError(SecondTraceError):
    pass


class ReducibleError(SecondTraceError):
    pass


class SingularFormError(SecondTraceError):
    """The polar (alternating) form of a quadratic space is degenerate."""

    def __init__(self, message, radical_vector=None):
        super().__init__(message)
        self.radical_vector = radical_vector


class UncertifiedError(SecondTraceError):
    """A Witt decomposition relied on an incomplete search."""


class PoleOrderError(SecondTraceError, ValueError):
    pass


class NotASquareError(SecondTraceError, ValueError):
    pass
