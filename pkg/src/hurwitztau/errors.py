"""Exception hierarchy shared by every module.

The CLI maps these onto process exit codes, so keep the taxonomy flat:
bad arguments, mathematical domain violations, lost numerical accuracy,
and refused-too-big requests are the only categories callers need.
"""


class HurwitzTauError(Exception):
    """Base class for all package errors."""


class ArgumentError(HurwitzTauError, ValueError):
    """Malformed input: weight mismatch, invalid partition, bad config."""


class DomainError(HurwitzTauError):
    """Mathematically invalid evaluation: pole hit, sector violated."""


class AccuracyError(HurwitzTauError):
    """A numerical result could not be resolved to the requested tolerance."""


class ConditioningError(AccuracyError):
    """Inputs too close to a degenerate configuration (e.g. coincident eigenvalues)."""


class CapacityError(HurwitzTauError):
    """Request exceeds a configured size bound for exact enumeration."""
