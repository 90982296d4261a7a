"""Exception hierarchy shared by every module."""


class LemniscateError(Exception):
    """Base class for all errors raised by this package."""


class NotOdd(LemniscateError, ValueError):
    """The Gaussian integer is divisible by 1+i (or is zero)."""


class NotOddInteger(LemniscateError, ValueError):
    pass


class BothZero(LemniscateError, ValueError):
    pass


class ZeroInput(LemniscateError, ValueError):
    pass


class NotCoprime(LemniscateError, ValueError):
    pass


class NotDivisible(LemniscateError, ArithmeticError):
    pass


class ZeroReduction(LemniscateError, ValueError):
    """A polynomial vanished identically after reduction modulo a prime."""


class NotSquarefree(LemniscateError, ValueError):
    pass


class NotSeparable(LemniscateError, ValueError):
    pass


class DegeneratePair(LemniscateError, ArithmeticError):
    """The addition-law denominator 1 + X1^2 X2^2 vanished identically."""


class PoleError(LemniscateError, ArithmeticError):
    pass


class PrecisionFailure(LemniscateError, ArithmeticError):
    pass


class InternalInconsistency(LemniscateError, RuntimeError):
    """A computed object violated a property that must hold by theory.

    This signals a bug in the computation, never bad input.
    """


class UnitInput(LemniscateError, ValueError):
    """The operation needs a nonunit argument."""
