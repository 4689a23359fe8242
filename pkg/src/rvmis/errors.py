class GraphError(ValueError):
    """Malformed graph input (self-loop, endpoint out of range, ...)."""


class NotIndependentError(ValueError):
    def __init__(self, edge, message=None):
        self.edge = tuple(edge)
        super().__init__(message or f"set is not independent: edge {self.edge} inside it")


class PreconditionError(ValueError):
    """An operation was called on an input outside its contract."""

    def __init__(self, message, vertex=None):
        self.vertex = vertex
        super().__init__(message)


class OracleLimitError(ValueError):
    """The exact oracle refuses instances above its size limit."""


class InvariantBreach(RuntimeError):
    """An internal certificate failed. Never expected; abort the computation."""


class DimacsParseError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ConfigError(ValueError):
    pass
