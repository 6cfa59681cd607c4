"""Exception types shared across the package.

Everything derives from :class:`GcglassoError` so callers can catch one
base class at the boundary (the CLI does exactly that).
"""


class GcglassoError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(GcglassoError):
    """An argument fails a structural precondition (shape, symmetry, range)."""


class NotPositiveDefinite(GcglassoError):
    """A matrix required to be positive definite is not."""


class DegenerateColumn(GcglassoError):
    """A data column is constant, so its empirical CDF carries no information."""


class OutOfRange(GcglassoError):
    """A probability-scale value lies outside the open interval (0, 1)."""


class MissingPilot(GcglassoError):
    """A penalty family needs a pilot estimate and none was supplied."""


class MissingContext(GcglassoError):
    """A criterion needs side information (truth, validation half) not provided."""


class EmptyPath(GcglassoError):
    """A path operation was asked to act on an empty or unscored path."""


class DimensionTooLarge(GcglassoError):
    """The reference quadratic-form route materializes d^2 x d^2 arrays and is
    capped at small d; use the production route instead."""


class DimensionMismatch(GcglassoError):
    """Two objects that must share a dimension do not."""


class ParseError(GcglassoError):
    """A data file could not be parsed; the message names row and column."""


class ConfigError(GcglassoError):
    """Invalid run configuration; the message lists every violation found."""
