"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class PrecisionError(ArithmeticError):
    """High-precision evaluation did not round cleanly to integers."""


class ResourceError(RuntimeError):
    """A computation gave up on a time or work budget."""


class ConfigurationError(ValueError):
    """Unknown method name or malformed configuration value."""
