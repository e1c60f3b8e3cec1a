"""Exception hierarchy shared by every module in the package."""


class FEPadicError(Exception):
    """Base class for all errors raised by fepadic."""


class InvalidParameter(FEPadicError, ValueError):
    pass


class ZeroConstantTerm(FEPadicError, ZeroDivisionError):
    pass


class InvalidIndex(FEPadicError, ValueError):
    pass


class MixedK(FEPadicError, ValueError):
    pass


class LengthMismatch(FEPadicError, ValueError):
    pass


class NonInvertibleDenominator(FEPadicError, ValueError):
    pass


class LimitExceeded(FEPadicError, RuntimeError):
    pass


class NoConvergence(FEPadicError, RuntimeError):
    pass


class UnknownFormat(FEPadicError, ValueError):
    pass


class GridError(FEPadicError, ValueError):
    pass


class PolySyntaxError(FEPadicError, ValueError):
    """Malformed polynomial expression.

    ``offset`` is the byte offset (UTF-8) of the offending token and
    ``expected`` the set of tokens that would have been accepted there.
    """

    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = frozenset(expected)
        detail = message
        if self.expected:
            detail += " (expected one of: %s)" % ", ".join(sorted(self.expected))
        super().__init__("at byte %d: %s" % (offset, detail))


class DivideByZero(FEPadicError, ZeroDivisionError):
    def __init__(self, message, offset):
        self.offset = offset
        super().__init__("at byte %d: %s" % (offset, message))
