"""Exception types for contract violations across the library."""


class WassineqError(Exception):
    """Base class for all library-specific errors."""


class DimensionError(WassineqError, ValueError):
    """Array length does not match the grid."""


class NumericError(WassineqError, ValueError):
    """Non-finite values where finite ones are required."""


class DomainError(WassineqError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class DegenerateDensityError(WassineqError, ValueError):
    """Input cannot be normalized into a probability density."""


class PositivityError(WassineqError, ValueError):
    """Operation requires a density bounded away from zero."""


class MonotonicityError(WassineqError, ValueError):
    """A map that must be nondecreasing is not."""


class ConfinementError(WassineqError, RuntimeError):
    """Potential does not confine enough mass on the working grid."""


class ConvergenceError(WassineqError, RuntimeError):
    """Iterative solver failed to converge within its budget."""


class HypothesisError(WassineqError, ValueError):
    """Inputs violate the hypotheses of the inequality being checked."""


class StabilityError(WassineqError, RuntimeError):
    """Explicit time step produced an invalid (negative) state."""


class WindowError(WassineqError, RuntimeError):
    """Search window did not contain the optimum; widen and retry."""


class ConfigError(WassineqError, ValueError):
    """Experiment configuration is malformed or references unknown names."""
