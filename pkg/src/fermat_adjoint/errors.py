"""Exception hierarchy.

Input problems derive from :class:`ConfigError` (also a ``ValueError``) so the
CLI can map them to a usage exit status; everything else is a computation
failure.
"""


class AdjointError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(AdjointError, ValueError):
    """Invalid user input (configuration, class, or system)."""


class NotPrime(ConfigError):
    pass


class DimensionTooSmall(ConfigError):
    pass


class WrongWeightCount(ConfigError):
    pass


class WeightsNotStrictlyIncreasing(ConfigError):
    pass


class WeightOutOfRange(ConfigError):
    pass


class PTooSmall(ConfigError):
    pass


class NotFundamentalCase(ConfigError):
    pass


class WrongDegree(ConfigError):
    pass


class InvalidPoint(ConfigError):
    pass


class TooLarge(AdjointError):
    """A raw enumeration would exceed the configured cap."""


class TooManyVariables(AdjointError):
    """Subset scans are limited to 24 variables."""


class OverflowDetected(AdjointError, ArithmeticError):
    """A 64-bit intermediate left the representable range."""


class Inconclusive(AdjointError):
    """The sign-convention oracle could not separate the two candidates."""
