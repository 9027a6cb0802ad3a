"""Exception hierarchy.

Every domain error derives from :class:`FoxchiError`; the CLI reports the
class name of the raised error in its machine-readable error object.
"""


class FoxchiError(Exception):
    """Base class for all domain errors raised by this package."""


# laurent
class NotDivisible(FoxchiError, ArithmeticError):
    pass


class DivisionByZero(FoxchiError, ZeroDivisionError):
    pass


class MultivariateInput(FoxchiError, ValueError):
    pass


class RingMismatch(FoxchiError, ValueError):
    pass


class PolynomialSyntaxError(FoxchiError, ValueError):
    pass


# fpgroup
class IndexOutOfRange(FoxchiError, IndexError):
    pass


class UnknownGenerator(FoxchiError, ValueError):
    pass


# alexander
class NotSymmetrizable(FoxchiError, ValueError):
    pass


# linkdiag
class DiagramError(FoxchiError, ValueError):
    """Base class for rejected braid/PD input."""


class BadToken(DiagramError):
    pass


class StrandOutOfRange(DiagramError):
    pass


class ArcCountMismatch(DiagramError):
    pass


class MalformedTuple(DiagramError):
    pass


class InconsistentOrientation(DiagramError):
    pass


# eulerchi
class ArityMismatch(FoxchiError, ValueError):
    pass


class NonIntegralBound(FoxchiError, ValueError):
    pass


# triangle
class NotCoprime(FoxchiError, ValueError):
    pass


class OutOfRange(FoxchiError, ValueError):
    pass


class EmptyExpansion(FoxchiError, ValueError):
    pass


class RecursionMismatch(FoxchiError, AssertionError):
    pass


class AmbiguousInput(FoxchiError, ValueError):
    pass


class Overdetermined(FoxchiError, ValueError):
    pass


class Underdetermined(FoxchiError, ValueError):
    pass


class NonIntegralDegree(FoxchiError, ValueError):
    pass
