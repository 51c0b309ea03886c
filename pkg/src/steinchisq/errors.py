"""Exception types raised by steinchisq."""


class SteinError(Exception):
    """Base class for all steinchisq errors."""


class InvalidWeight(SteinError, ValueError):
    pass


class InvalidDof(SteinError, ValueError):
    pass


class EmptySpec(SteinError, ValueError):
    pass


class BadIndex(SteinError, IndexError):
    pass


class BadOrder(SteinError, ValueError):
    pass


class BadCount(SteinError, ValueError):
    pass


class ModeUnsupported(SteinError, TypeError):
    """Exact arithmetic requested where only floats make sense, or a mode mix."""


class NotIntegrable(SteinError, ValueError):
    """A test function fails the moment conditions for the target law."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class InternalInconsistency(SteinError, AssertionError):
    """A coefficient identity failed in exact mode. Always a bug."""


class TheoremViolation(SteinError, AssertionError):
    """E[T f(U)] came out nonzero in exact mode. Always a bug."""


class LemmaViolation(SteinError, AssertionError):
    """The chi-square integration by parts identity failed. Always a bug."""
