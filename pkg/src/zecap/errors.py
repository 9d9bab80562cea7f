"""Exception types shared across the package."""


class ZecapError(Exception):
    """Base class for errors raised by this package."""


class InputError(ZecapError):
    """A caller-supplied value violates a documented precondition."""


class BudgetError(ZecapError):
    """A resource budget (vertices, nodes, cliques, stages) ran out.

    Carries whatever partial result was available when the budget died,
    so callers never have to re-derive work that was already done.
    """

    def __init__(self, message, partial=None, used=None, reason=None):
        super().__init__(message)
        self.partial = partial
        self.used = used
        self.reason = reason or message


class ConvergenceError(ZecapError):
    """An iterative solver could not reach the requested tolerance."""
