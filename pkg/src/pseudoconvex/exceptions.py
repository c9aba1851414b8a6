"""Exception hierarchy shared by every module of the package."""


class PseudoConvexError(Exception):
    """Base class for all package errors."""


class BadInput(PseudoConvexError, ValueError):
    """Input point set has the wrong size or violates general position."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotEnoughPoints(PseudoConvexError):
    pass


class OutsideHull(PseudoConvexError):
    pass


class MalformedPart(PseudoConvexError, ValueError):
    pass


class SearchLimitExceeded(PseudoConvexError):
    pass


class BranchMisfire(PseudoConvexError):
    """A case construction did not produce a valid partition."""


class InvalidCertificate(PseudoConvexError):
    pass


class BudgetExhausted(PseudoConvexError):
    pass


class BadSpec(PseudoConvexError, ValueError):
    pass
