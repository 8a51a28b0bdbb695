"""Exception hierarchy shared by all tropica modules."""


class TropicaError(Exception):
    """Base class for every error raised by the library."""


class InversionOfZero(TropicaError, ZeroDivisionError):
    pass


class NotClosed(TropicaError):
    """The semifield has no n-th root for the requested element."""


class EmptyInf(TropicaError, ValueError):
    pass


class DimensionMismatch(TropicaError, ValueError):
    pass


class NotArchimedean(TropicaError, ValueError):
    pass


class UnboundedCoordinate(TropicaError):
    def __init__(self, column):
        super().__init__(f"column {column} is all bottom; coordinate {column} is unbounded")
        self.column = column


class DivergentStar(TropicaError):
    pass


class NoCycles(TropicaError):
    pass


class VerificationFailed(TropicaError):
    pass


class TooLarge(TropicaError, ValueError):
    pass


class NotATopology(TropicaError, ValueError):
    pass


class NotMember(TropicaError, ValueError):
    pass


class ParseError(TropicaError, ValueError):
    pass
