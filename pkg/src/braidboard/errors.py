"""Shared exception types.

The CLI maps these onto exit codes: DomainError and its subclasses mean the
input was invalid (exit 2), BudgetExceededError means a configured resource
bound was hit (exit 3). A failing verification verdict is not an exception;
it travels inside the report (exit 1 at the CLI).
"""

from __future__ import annotations


class DomainError(ValueError):
    """Invalid input: unknown ids, malformed structures, broken preconditions."""


class FamilyNotClosedError(DomainError):
    """A graph family's membership predicate is not subgraph-closed."""


class InvalidHeightError(DomainError):
    """A height function has a horizontal cell (two equal-height vertices)."""


class BudgetExceededError(RuntimeError):
    """A configured cell/step budget was exceeded; never a silent truncation."""
