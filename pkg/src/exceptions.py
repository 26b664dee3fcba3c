from typing import Optional


class GraphParseError(ValueError):
    """Malformed graph text. ``offset`` is the 0-based byte offset in ``line``."""

    def __init__(self, message: str, offset: int = 0, line: Optional[int] = None):
        self.reason = message
        self.offset = offset
        self.line = line
        where = f"line {line}, byte {offset}" if line is not None else f"byte {offset}"
        super().__init__(f"{where}: {message}")


class PartitionStructureError(ValueError):
    """The blocks do not form a partition of the vertex set (overlap, gap, empty block)."""


class OrderCapExceeded(ValueError):
    def __init__(self, order: int, cap: int, what: str = "solver"):
        self.order = order
        self.cap = cap
        super().__init__(f"graph of order {order} exceeds the {what} cap of {cap}")


class SolverInconclusive(RuntimeError):
    """The node budget ran out before the search could settle the answer."""

    def __init__(self, nodes: int, budget: int, best_lower_bound: Optional[int] = None):
        self.nodes = nodes
        self.budget = budget
        self.best_lower_bound = best_lower_bound
        super().__init__(
            f"node budget {budget} exhausted after {nodes} nodes; "
            f"best lower bound: {best_lower_bound if best_lower_bound is not None else 'none'}"
        )
