"""Shared exception types."""


class UsageError(ValueError):
    """A call violated an operation's precondition."""


class MismatchedVariablesError(UsageError):
    """Operands live over different variable sets."""


class BudgetExceededError(RuntimeError):
    """An exhaustive search would exceed its configured cap."""


class ParseError(ValueError):
    """A graph or ideal file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
