"""
Exceptions raised by dual_graph_cycles. Each one subclasses the builtin a plain implementation would raise, so callers
that only know about ValueError or RuntimeError keep working.
"""


class InputError(ValueError):
    """Malformed input: bad dimensions, disconnected supports, non-effective cycles, bad files."""


class GraphSyntaxError(InputError):
    """A graph file could not be parsed. Carries the 1-based line and column of the offending token."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column

        if line is not None:
            message = f"line {line}, column {column}: {message}"

        super().__init__(message)


class DomainError(ValueError):
    """A mathematical precondition does not hold for the given graph or cycle."""


class ResourceLimitError(RuntimeError):
    """A search budget from dual_graph_cycles.LIMITS was exceeded."""


class InvariantError(AssertionError):
    """An identity that must always hold failed. Indicates bad input data or a bug."""
