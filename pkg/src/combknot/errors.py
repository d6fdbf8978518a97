class ParseError(ValueError):
    """Malformed text input; carries the 1-based line and column of the fault."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.reason = message
        self.line = line
        self.column = column


class InvariantViolation(RuntimeError):
    """Two derivations that must agree did not."""
