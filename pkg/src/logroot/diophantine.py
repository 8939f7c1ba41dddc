"""Minimal non-negative solutions of linear Diophantine systems.

This is the Contejean-Devie breadth-first search: grow candidate vectors one
unit at a time, only in directions that decrease the defect ||A p||, pruning
anything that dominates a solution already found.  For a homogeneous system
A x = 0 the returned minimal solutions form a Hilbert basis of the solution
monoid; every solution is a sum of minimal ones.

Inhomogeneous systems A x = b are handled by the usual homogenisation with
one extra coordinate capped at 1.
"""

from __future__ import annotations

from .bounds import DEFAULT_BOUNDS, Bounds
from .errors import ResourceError


def _dot(a: list[int], b: list[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _dominates(x: tuple[int, ...], y: tuple[int, ...]) -> bool:
    return all(a >= b for a, b in zip(x, y))


def minimal_solutions(
    a: list[list[int]],
    cols: int | None = None,
    *,
    cap: dict[int, int] | None = None,
    bounds: Bounds = DEFAULT_BOUNDS,
) -> list[tuple[int, ...]]:
    """Minimal nonzero x in N^n with A x = 0.

    ``cap`` optionally bounds individual coordinates during the search; a
    capped coordinate never exceeds its cap in any returned solution, which is
    only sound when callers do not need solutions beyond the cap (the
    homogenisation trick below is the intended use).
    """
    if not a:
        # no equations: every unit vector is a minimal solution
        n = cols or 0
        return [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]
    n = len(a[0]) if cols is None else cols
    if n == 0:
        return []
    columns = [[row[j] for row in a] for j in range(n)]
    minimals: list[tuple[int, ...]] = []
    unit = lambda j: tuple(1 if k == j else 0 for k in range(n))

    frontier: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for j in range(n):
        e = unit(j)
        if cap is not None and cap.get(j, None) is not None and e[j] > cap[j]:
            continue
        frontier.append(e)
        seen.add(e)

    visited = 0
    while frontier:
        next_frontier: list[tuple[int, ...]] = []
        # solutions first, so same-level domination is caught
        defects = []
        for p in frontier:
            visited += 1
            if visited > bounds.node_budget:
                raise ResourceError(
                    "Diophantine search exceeded node budget "
                    f"({bounds.node_budget}); {len(minimals)} minimal "
                    "solutions found so far",
                    partial=minimals,
                )
            v = [_dot(row, p) for row in a]
            if all(e == 0 for e in v):
                if not any(_dominates(p, m) for m in minimals):
                    minimals.append(p)
            else:
                defects.append((p, v))
        for p, v in defects:
            if any(_dominates(p, m) for m in minimals):
                continue
            for j in range(n):
                if _dot(v, columns[j]) >= 0:
                    continue
                if cap is not None:
                    cj = cap.get(j)
                    if cj is not None and p[j] + 1 > cj:
                        continue
                q = tuple(p[k] + (1 if k == j else 0) for k in range(n))
                if q in seen:
                    continue
                if any(_dominates(q, m) for m in minimals):
                    continue
                seen.add(q)
                next_frontier.append(q)
        frontier = next_frontier
    return sorted(minimals)


def minimal_inhomogeneous_solutions(
    a: list[list[int]],
    b: list[int],
    *,
    bounds: Bounds = DEFAULT_BOUNDS,
) -> list[tuple[int, ...]]:
    """Minimal x in N^n with A x = b (b may be any integer vector)."""
    if not a:
        raise ValueError("need at least one equation row")
    n = len(a[0])
    lifted = [row + [-b[i]] for i, row in enumerate(a)]
    sols = minimal_solutions(lifted, n + 1, cap={n: 1}, bounds=bounds)
    return sorted(s[:n] for s in sols if s[n] == 1)


def has_nonneg_solution(
    a: list[list[int]],
    b: list[int],
    *,
    bounds: Bounds = DEFAULT_BOUNDS,
) -> bool:
    """Decide whether A x = b admits any x in N^n."""
    if all(e == 0 for e in b):
        return True
    return bool(minimal_inhomogeneous_solutions(a, b, bounds=bounds))
