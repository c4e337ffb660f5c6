"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input violates a documented precondition (domain, range, shape)."""


class FitError(RuntimeError):
    """Parameter estimation cannot proceed (degenerate or insufficient data)."""


class ConfigError(ValueError):
    """Scenario configuration or bundled dataset is missing or malformed."""
