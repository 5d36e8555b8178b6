"""Exception hierarchy shared by the engine, parser and interfaces."""


class SurrealError(Exception):
    """Base class for all errors raised by this package."""


class ResourceLimitError(SurrealError):
    """A configured resource limit was exceeded."""


class DepthLimitError(ResourceLimitError):
    """Order-relation descent exceeded the configured maximum.

    Well-formed finite forms never hit this; it signals a cyclic or
    pathologically deep input.
    """


class GenerationLimitError(ResourceLimitError):
    """A tree walk would pass the configured maximum generation."""


class BudgetExceededError(ResourceLimitError):
    """An evaluation ran past its wall-clock budget (used by the bench)."""


class SurrealSyntaxError(SurrealError):
    """Input text could not be parsed.

    ``position`` is a 0-based offset into the input line.
    """

    def __init__(self, message: str, position: int = 0):
        super().__init__(message)
        self.message = message
        self.position = position


class EvalError(SurrealError):
    """A well-formed statement could not be evaluated (unbound variable,
    non-number form, operand type mismatch)."""
