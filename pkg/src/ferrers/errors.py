"""Exception types raised across the package.

Everything derives from :class:`FerrersError`, itself a ``ValueError``, so
callers that only care about "bad input" can catch one thing.
"""


class FerrersError(ValueError):
    pass


# core
class DiagramSyntaxError(FerrersError):
    pass


class NonMonotoneInput(FerrersError):
    pass


class NegativeEntry(FerrersError):
    pass


class InvalidSize(FerrersError):
    pass


class LetterCountMismatch(FerrersError):
    pass


class DiagramExceedsLattice(FerrersError):
    pass


# formulas
class InexactDivision(FerrersError):
    """An exact division left a remainder. Indicates an arithmetic bug."""


class InexactFinalResult(InexactDivision):
    pass


class NotCoprime(FerrersError):
    pass


class NotPrime(FerrersError):
    pass


class DomainViolation(FerrersError):
    pass


# christoffel
class UnsupportedGap(FerrersError):
    pass


# decompose
class EmptyDiagram(FerrersError):
    pass


class AlreadyStaircase(FerrersError):
    pass


class NotACorner(FerrersError):
    pass


class NegativeCount(FerrersError):
    pass


# oracle / kreweras
class BudgetExceeded(FerrersError):
    pass


class CapExceeded(FerrersError):
    pass


class NotANode(FerrersError):
    pass
