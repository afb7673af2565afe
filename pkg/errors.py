# Error hierarchy for the k-GRoDel toolkit
#
# Every error carries a human readable ``detail`` and the process exit code
# the CLI returns for it: 1 usage, 2 input, 3 budget/timeout.
from typing import Optional


class GrodelError(Exception):
    """Base class for all errors raised by the toolkit"""

    exit_code: int = 2

    def __init__(self, detail: str, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code

    def __str__(self) -> str:
        return self.detail


class UsageError(GrodelError):
    exit_code = 1


class InputError(GrodelError):
    exit_code = 2


class GraphError(InputError):
    """Invalid graph construction or operation (bad edge, bad generator params)"""


class EdgeListParseError(InputError):
    def __init__(self, detail: str, line_number: Optional[int] = None):
        if line_number is not None:
            detail = f"line {line_number}: {detail}"
        super().__init__(detail)
        self.line_number = line_number


class UnknownEdgeError(InputError):
    def __init__(self, edge):
        super().__init__(f"edge ({edge[0]}, {edge[1]}) is not in the graph")
        self.edge = edge


class DisconnectedGraphError(InputError):
    pass


class BridgeEdgeError(InputError):
    """Sherman-Morrison downdate attempted on a bridge; use bridge_split_update"""


class DimensionMismatchError(InputError):
    pass


class BudgetExceededError(GrodelError):
    exit_code = 3
