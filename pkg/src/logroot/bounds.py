"""Search budgets for the semi-decision procedures.

All bounded searches in the package draw their limits from a single Bounds
value so the CLI can expose them as flags.  The defaults are generous for
desk-scale inputs; none of them is derived from the underlying mathematics,
which provides no witness bounds.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Bounds:
    # Maximum number of rewrite rules produced during completion.
    rule_budget: int = 4000
    # Degree cap for bounded word enumerations (kernels, preimages, units).
    search_bound: int = 8
    # Degree cap when enumerating graded-piece representatives.
    piece_height: int = 10
    # Node cap for the Diophantine minimal-solution search.
    node_budget: int = 400_000


DEFAULT_BOUNDS = Bounds()
