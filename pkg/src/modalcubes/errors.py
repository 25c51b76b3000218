"""Exception hierarchy shared by the engine modules."""


class EngineError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(EngineError):
    """Raised on malformed input text; carries the offending position."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ModeError(EngineError):
    """An operation was requested in a category mode that does not support it."""


class AxisError(EngineError):
    """An axis/direction is missing, duplicated, or out of range."""


class CompositionError(EngineError):
    """Cells are not composable as requested."""


class ChainError(EngineError):
    """Operator chains of a two-cell term do not line up."""
