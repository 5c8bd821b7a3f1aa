"""Exception types shared across the package."""


class BmaMetaError(Exception):
    """Base class for all package errors."""


class ZeroCellError(BmaMetaError, ValueError):
    """A 2x2 table contains a zero cell and no continuity correction was requested."""


class DegenerateVarianceError(BmaMetaError, ValueError):
    """The computed standard error is exactly zero."""


class InvalidEstimateError(BmaMetaError, ValueError):
    """An effect estimate violates its invariants (se <= 0, non-finite, out of range)."""


class InvalidPriorError(BmaMetaError, ValueError):
    """A prior specification has invalid parameters for analysis."""


class DomainError(BmaMetaError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class UndefinedMomentError(BmaMetaError, ValueError):
    """The requested moment does not exist for the distribution (e.g. t with df <= 1)."""


class UnknownTopicError(BmaMetaError, KeyError):
    """No registry entry for the requested topic; the message lists near matches."""


class MissingTauPriorError(BmaMetaError, LookupError):
    """The registry row has no heterogeneity prior but random-effects models were requested."""


class QuadratureError(BmaMetaError, ArithmeticError):
    """Numerical integration produced non-finite values beyond recoverable rescaling."""


class NotConvergedError(BmaMetaError, ArithmeticError):
    """Grid refinement failed to stabilize a log marginal within the tolerance."""


class ParameterFixedError(BmaMetaError, ValueError):
    """A posterior grid was requested for a parameter the hypothesis fixes at a point."""


class DegenerateOddsError(BmaMetaError, ZeroDivisionError):
    """A prior inclusion odds side is zero; the inclusion Bayes factor is undefined."""


class ScaleError(BmaMetaError, ValueError):
    """The requested output-scale transformation is not defined for the measure."""


class InsufficientDataError(BmaMetaError, ValueError):
    """Too few values to fit the requested family."""


class NonConvergenceError(BmaMetaError, ArithmeticError):
    """Maximum-likelihood optimization did not meet its convergence criterion."""


class ParseError(BmaMetaError, ValueError):
    """Malformed input file; carries row/column context in the message."""


class MixedSchemaError(ParseError):
    """A CSV mixes 2x2 count columns with estimate-pair columns."""
