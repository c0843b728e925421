"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Inputs fall outside a function's stated domain."""


class ThresholdError(ParameterError):
    """x is below the validity threshold of the bound being evaluated."""


class QuadratureError(RuntimeError):
    """Adaptive integration failed to reach the requested accuracy."""


class ResourceLimitError(RuntimeError):
    """A search or enumeration would exceed its configured cap."""


class UnsupportedFieldError(ParameterError):
    """Quadratic field outside the supported class-number-one list."""
