"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent input data."""


class DimensionError(InputError):
    """Operands whose shapes do not line up."""


class PreconditionError(InputError):
    """Input is well formed but violates a stated hypothesis."""
