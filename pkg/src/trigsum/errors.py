"""Shared exception types."""


class ParameterError(ValueError):
    """Arguments violate a family's validity constraints (wrong parity,
    divisibility, coprimality, or range)."""
