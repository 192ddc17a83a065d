"""Error kinds raised by the exact-arithmetic core and the verifier."""


class BernsteinGapError(ValueError):
    """Base class for every library error"""


class DomainError(BernsteinGapError):
    """A point x or y lies outside the unit interval"""


class LengthMismatch(BernsteinGapError):
    """A sample or coefficient vector has the wrong length"""


class TooShort(BernsteinGapError):
    """A sequence is too short for a second forward difference"""


class NonDivisible(BernsteinGapError):
    """A polynomial has a nonzero constant or linear coefficient"""


class NegativeCoefficient(BernsteinGapError):
    """A Taylor coefficient of the gap polynomial came out negative"""


class UnsupportedExact(BernsteinGapError):
    """A float-only function was requested in exact mode"""


class SpecParseError(BernsteinGapError):
    """A function spec string does not follow the grammar"""

