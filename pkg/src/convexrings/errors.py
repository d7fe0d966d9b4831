"""Exception types shared across the package."""


class BudgetExceeded(RuntimeError):
    """A computation hit its configured resource cap (pair count, degree, box size)."""


class ContractViolation(ValueError):
    """An input violated a structural hypothesis that an algorithm relies on.

    Raised e.g. when a skeleton blank cannot be filled because a quotient
    fails to factor over the semigroup, which means the generating set was
    not a convex sequence closed under monomial division.
    """


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; signals a bug, not bad input."""
