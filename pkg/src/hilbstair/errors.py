"""Exception hierarchy shared by the engines and the CLI."""


class StaircaseError(ValueError):
    """Base class for every error raised by hilbstair."""


class EmptyInput(StaircaseError):
    pass


class InfiniteColength(StaircaseError):
    pass


class InvalidExponent(StaircaseError):
    pass


class NotNested(StaircaseError):
    pass


class NotRectangular(StaircaseError):
    pass


class WrongDimension(StaircaseError):
    pass


class HeadInIdeal(StaircaseError):
    pass


class InvalidArrow(StaircaseError):
    pass


class HypothesisViolated(StaircaseError):
    pass


class SizeCapExceeded(StaircaseError):
    pass


class ParseError(StaircaseError):
    pass


class VerificationError(StaircaseError):
    """Two computations that must agree did not."""
