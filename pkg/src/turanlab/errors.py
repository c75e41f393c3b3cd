"""Shared exception types."""


class VertexLimitError(ValueError):
    """A materialized graph would exceed the configured vertex cap."""


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class BudgetExceededError(RuntimeError):
    """An enumeration exceeded its node budget."""
