"""Shared exception types."""


class NoRootFoundError(RuntimeError):
    """A root search scanned its whole window without finding a root."""


class NonFiniteError(ArithmeticError):
    """A function evaluated to nan or infinity during a root search."""


class MissingConstantError(ValueError):
    """A required model constant was not supplied and has no known default."""


class InvariantViolationError(RuntimeError):
    """A computed result failed one of the library's internal guarantees."""
