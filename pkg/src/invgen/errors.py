"""Exception hierarchy.

``ResourceCapError`` subclasses map to CLI exit code 3, everything else that
is an ``InvGenError`` is a check/usage failure.
"""


class InvGenError(Exception):
    pass


class ResourceCapError(InvGenError):
    pass


class OrderCapExceeded(ResourceCapError):
    pass


class BudgetExceeded(ResourceCapError):
    pass


class CohomologyCapExceeded(ResourceCapError):
    pass


class IterationBudgetExceeded(ResourceCapError):
    pass


class SearchBoundExceeded(ResourceCapError):
    pass


class InvalidPermutation(InvGenError, ValueError):
    pass


class NotSoluble(InvGenError):
    pass


class NotNormal(InvGenError):
    pass


class ElementNotInGroup(InvGenError, ValueError):
    pass


class NotIrreducible(InvGenError):
    pass


class DuplicateIsomorphismClass(InvGenError):
    pass


class FieldMismatch(InvGenError, ValueError):
    pass


class HypothesisViolated(InvGenError, ValueError):
    pass


class MissingAnnotation(InvGenError):
    pass


class NotInvariableGenerators(InvGenError, ValueError):
    pass


class NonCoprimePrime(InvGenError, ValueError):
    pass


class UnknownSuite(InvGenError, ValueError):
    pass


class SplittingViolation(InvGenError):
    """A numerical consequence of the splitting-field assumption failed."""


class ParseError(InvGenError, ValueError):
    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = tuple(expected)
        detail = f" (expected {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")
