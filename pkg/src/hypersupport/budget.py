"""Search budgets and the first-class "unknown" result.

Budgets are counted in search-node expansions, never in wall time, so
exhaustive runs are reproducible across machines.  A search that runs out
of budget reports :class:`Unknown` instead of guessing.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

DEFAULT_BUDGET = 2_000_000
_BUDGET_ENV_VAR = "HYPERSUPPORT_BUDGET"


def default_budget() -> int:
    """Budget used when the caller does not pass one.

    The environment variable ``HYPERSUPPORT_BUDGET`` overrides the built-in
    default.
    """
    raw = os.environ.get(_BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{_BUDGET_ENV_VAR} must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"{_BUDGET_ENV_VAR} must be positive, got {value}")
    return value


class BudgetExhausted(Exception):
    """Internal signal; callers receive an :class:`Unknown` result instead."""


@dataclass
class Budget:
    """Mutable node-expansion counter shared by nested searches."""

    limit: int
    spent: int = 0

    def spend(self, n: int = 1) -> None:
        self.spent += n
        if self.spent > self.limit:
            raise BudgetExhausted(f"budget of {self.limit} node expansions exhausted")

    @property
    def remaining(self) -> int:
        return max(0, self.limit - self.spent)


@dataclass(frozen=True)
class Unknown:
    """Result of a search that exhausted its budget before deciding.

    ``best_bound`` carries the best certificate-backed bound found so far
    (for example an upper bound on the outerplanarity number), if any.
    """

    nodes_expanded: int
    best_bound: int | None = None

    def __bool__(self) -> bool:
        raise TypeError("Unknown is not a truth value; test with isinstance")


@dataclass
class SearchStats:
    """Auditable counters emitted alongside search answers."""

    nodes_expanded: int = 0
    leaves_checked: int = 0
    prunes: dict[str, int] = field(default_factory=dict)

    def count_prune(self, kind: str) -> None:
        self.prunes[kind] = self.prunes.get(kind, 0) + 1

    def as_dict(self) -> dict:
        return {
            "nodes_expanded": self.nodes_expanded,
            "leaves_checked": self.leaves_checked,
            "prunes": dict(sorted(self.prunes.items())),
        }
