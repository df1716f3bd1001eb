"""Exception types shared across modules; the CLI maps each to an exit code."""


class ToleranceNotMetError(ArithmeticError):
    """A certified error bound exceeds the requested tolerance."""


class InternalInvariantError(RuntimeError):
    """A condition that the mathematics guarantees failed to hold."""
