"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """Raised when arguments violate an operation's preconditions."""


class BudgetExceeded(InvalidInput):
    """Raised when an instance would exceed the supported size budget."""


class NotEulerian(ValueError):
    """Raised when a graph fails the Eulerian criterion.

    ``reason`` is either ``"unbalanced"`` or ``"disconnected"``.
    """

    def __init__(self, reason, detail=""):
        self.reason = reason
        super().__init__(f"graph is not Eulerian: {reason}" + (f" ({detail})" if detail else ""))


class GreedyStall(RuntimeError):
    """A greedy construction got stuck before covering every object."""

    def __init__(self, covered, total, word):
        self.covered = covered
        self.total = total
        self.word = tuple(word)
        super().__init__(f"greedy stalled after covering {covered} of {total} objects")


class CyclicOrder(ValueError):
    """An implied order contains a directed cycle and cannot be linearized."""

    def __init__(self, row, witness):
        self.row = row
        self.witness = list(witness)
        super().__init__(f"implied order on row {row} has a cycle: {self.witness}")
