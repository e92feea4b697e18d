"""Exception hierarchy shared across the package.

Two broad families matter for callers: :class:`DataError` (bad or malformed
input; CLI exit code 3) and :class:`NumericError` (a well-formed problem that
cannot be solved or has no testable information; CLI exit code 4).
"""


class ElustatError(Exception):
    """Base class for every error raised by this package."""


class NumericError(ElustatError):
    """Numeric failure during solving or estimation."""


class DataError(ElustatError):
    """Invalid, inconsistent, or malformed input data."""


class ConstraintInfeasible(NumericError):
    """The null value is on or outside the convex hull of the kernel values."""


class NonConvergence(NumericError):
    """Iteration budget exhausted before the residual tolerance was met."""

    def __init__(self, message, best_residual=None, iterations=None):
        super().__init__(message)
        self.best_residual = best_residual
        self.iterations = iterations


class SingularHessian(NumericError):
    """Second-moment matrix of the kernel values is rank deficient."""


class InfeasibleLambda(NumericError):
    """A multiplier puts some weight denominator at or below zero."""


class ZeroVariance(NumericError):
    """A scaling variance is exactly zero."""


class DegenerateVariance(NumericError):
    """A variance estimate is zero: the data carry no testable information."""


class SingularH(NumericError):
    """The normalizing matrix is too ill-conditioned to factor."""


class AllZeroWeights(NumericError):
    """Every mixture weight is zero; the reference distribution is degenerate."""


class InvalidCovariance(DataError):
    """A covariance matrix is not positive definite."""


class DimensionMismatch(DataError):
    """Inputs that must share a dimension do not."""


class MissingCensorFlags(DataError):
    """A censored-data procedure was given data without censoring flags."""


class InsufficientData(DataError):
    """A group has fewer observations than the procedure requires."""


class ParseError(DataError):
    """A malformed row in an input file (message names the line)."""


class SchemaError(DataError):
    """An input file is missing a required column or section."""


class EmptyGroup(DataError):
    """One of the two groups contains no observations."""


class UsageError(ElustatError):
    """Bad command-line usage."""
