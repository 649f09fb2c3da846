"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A family parameter or field element violates its constraints."""


class MemoryCapError(RuntimeError):
    """A requested truth table would exceed the configured size cap."""
