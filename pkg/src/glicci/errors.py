"""Exception hierarchy shared by every module."""


class GlicciError(Exception):
    """Base class for all errors raised by this package."""


class VertexOutOfRange(GlicciError, ValueError):
    pass


class EmptyInput(GlicciError, ValueError):
    pass


class NotAFace(GlicciError, ValueError):
    pass


class ApexExists(GlicciError, ValueError):
    pass


class DimensionOutOfRange(GlicciError, ValueError):
    pass


class ParseError(GlicciError, ValueError):
    """Malformed complex, ideal or certificate file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnitIdeal(GlicciError, ValueError):
    pass


class VariableCollision(GlicciError, ValueError):
    pass


class NotSubideal(GlicciError, ValueError):
    pass


class SizeGuardExceeded(GlicciError):
    pass


class NotPrime(GlicciError, ValueError):
    pass


class NotCohenMacaulay(GlicciError):
    pass


class NotPure(GlicciError):
    pass


class EmptyComplex(GlicciError):
    pass


class NotWeaklyVertexDecomposable(GlicciError):
    """Raised when no certificate exists; carries the failed search trace."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class Not2CM(GlicciError):
    pass


class WrongCodim(GlicciError):
    pass


class SearchExhausted(GlicciError):
    pass


class NotAShelling(GlicciError, ValueError):
    pass


class NoRouteAvailable(GlicciError):
    pass
