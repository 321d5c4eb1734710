"""Exception types raised by the library.

All of them derive from :class:`LeaderFollowerError` so callers (and the CLI)
can separate data problems from numeric failures.
"""


class LeaderFollowerError(Exception):
    """Base class for every error raised by this package."""


class GraphError(LeaderFollowerError, ValueError):
    """Invalid graph construction input (bad index, empty graph...)."""


class ParseError(GraphError):
    """Malformed edge-list or partition file."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class DisconnectedGraphError(GraphError):
    """An operation that needs a connected graph got a disconnected one."""

    def __init__(self, node):
        super().__init__(f"graph is disconnected: node {node} is unreachable")
        self.node = node


class PartitionError(LeaderFollowerError, ValueError):
    """Partitions that cannot be compared or are malformed."""


class GenerationError(LeaderFollowerError, ValueError):
    """A planted instance cannot be generated from the given parameters."""


class ConvergenceError(LeaderFollowerError, ArithmeticError):
    """An iterative numeric routine failed to reach its tolerance."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual
