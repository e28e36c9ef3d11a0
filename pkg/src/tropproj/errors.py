"""Exception hierarchy.

Every error raised by the package derives from :class:`TropError`; the
concrete classes also derive from the closest builtin so callers that only
know about ``ValueError``/``ZeroDivisionError`` still catch them.
"""


class TropError(Exception):
    """Base class for all package errors."""


class ZeroHasNoValuation(TropError, ValueError):
    pass


class DivisionByZeroPoly(TropError, ZeroDivisionError):
    pass


class BothZero(TropError, ValueError):
    pass


class ZeroInput(TropError, ValueError):
    pass


class ZeroConstantTerm(TropError, ValueError):
    """The polynomial vanishes at the origin, so a root lies off the torus."""


class NonInvertible(TropError, ArithmeticError):
    """Element shares a factor with the modulus of the quotient ring."""


class InvalidBasis(TropError, ValueError):
    """A shape basis failed validation; ``diagnostics`` lists the violations."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


class GlueMismatch(TropError, RuntimeError):
    """Internal verification failure while pulling back eliminant points."""


class ZeroCoordinate(TropError, ValueError):
    pass


class InvalidArity(TropError, ValueError):
    pass
