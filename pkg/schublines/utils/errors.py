"""
Exception hierarchy of the schublines library.

Every exception carries a message naming the rule that was violated, so
that the command line can forward it verbatim as a diagnostic.
"""


class SchublinesError(Exception):
    """Base class of every error raised by schublines."""


class InvalidProblem(SchublinesError, ValueError):
    """The condition list does not describe a usable Schubert problem."""


class ParityError(InvalidProblem):
    """The conditions have an odd sum."""


class NonPositiveCondition(InvalidProblem):
    """A condition codimension is zero or negative."""


class ResourceLimit(SchublinesError, RuntimeError):
    """An enumeration exceeded its configured cap."""


class PreconditionViolation(SchublinesError, ValueError):
    """The arguments violate the hypotheses of an operation."""


class LemmaFailure(SchublinesError, AssertionError):
    """No split pair satisfies the rearrangement lemma."""


class DomainError(SchublinesError, ValueError):
    """An angle lies outside of [0, pi]."""


class TruncationTooSmall(SchublinesError, ValueError):
    """The truncation of a Toeplitz operator is too small to be useful."""


class CertificateError(SchublinesError, ValueError):
    """A certificate tree failed validation or could not be decoded."""


class SinkTimeout(SchublinesError, TimeoutError):
    """The Sink gave up waiting; `responses` holds what it gathered."""

    def __init__(self, message: str, responses=()):
        super().__init__(message)
        self.responses = list(responses)
