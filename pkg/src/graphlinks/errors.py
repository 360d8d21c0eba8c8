"""Exception types shared across the package."""

from __future__ import annotations


class UnknownVertexError(KeyError):
    """A vertex name or index that the graph does not contain."""


class SameVertexError(ValueError):
    """An operation that needs two distinct vertices got the same one twice."""


class TooLargeError(ValueError):
    """Input exceeds the configured size bound for an exact algorithm."""


class BudgetExceededError(RuntimeError):
    """A bounded search ran out of time or states before reaching an answer."""


class PreconditionError(ValueError):
    """A move or construction was asked for on input that does not admit it."""
