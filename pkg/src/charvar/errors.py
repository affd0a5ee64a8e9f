"""Exception types shared across the package."""


class CharvarError(Exception):
    """Base class for computation errors raised by the library."""


class ZeroDenominator(CharvarError, ZeroDivisionError):
    pass


class NotPolynomial(CharvarError):
    pass


class OddParity(CharvarError):
    """A half-integer power of q survived a substitution."""


class SizeMismatch(CharvarError, ValueError):
    pass


class DegreeCapExceeded(CharvarError):
    pass


class AlphabetMismatch(CharvarError, ValueError):
    pass


class NonzeroConstantTerm(CharvarError, ValueError):
    pass


class ConstantTermNotOne(CharvarError, ValueError):
    pass


class UnsupportedGenusZero(CharvarError, ValueError):
    pass


class DivisibleMu(CharvarError, ValueError):
    pass


class NotFound(CharvarError):
    pass


class BudgetExceeded(CharvarError):
    pass


class NonIntegerResult(CharvarError):
    pass


class ParseError(CharvarError, ValueError):
    pass
