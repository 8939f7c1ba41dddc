"""Finitely generated abelian groups presented by integer matrices.

A group is presented as Z^n modulo the column span of an integer matrix.
Smith normal form gives the canonical invariants, canonical forms for
elements, membership tests for the subgroup, and coset representatives when
the quotient is finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .intlinalg import SmithNormalForm, mat_vec, shape, smith_normal_form

__all__ = [
    "FgAbelianGroup",
    "PresentedGroup",
    "LatticeMap",
    "smith_normal_form",
    "cokernel_group",
    "membership",
]


@dataclass(frozen=True)
class FgAbelianGroup:
    """Canonical form: free rank plus the invariant-factor chain."""

    free_rank: int
    torsion_invariants: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative rank")
        for i, d in enumerate(self.torsion_invariants):
            if d < 2:
                raise ValueError("torsion invariants must be >= 2")
            if i > 0 and d % self.torsion_invariants[i - 1] != 0:
                raise ValueError("invariant factors must form a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion_invariants

    @property
    def is_torsion_free(self) -> bool:
        return not self.torsion_invariants

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for d in self.torsion_invariants:
            n *= d
        return n

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion_invariants]
        return " x ".join(parts) if parts else "0"


class PresentedGroup:
    """Z^ambient_rank modulo the subgroup spanned by ``relations`` columns."""

    def __init__(self, ambient_rank: int, relations: list[list[int]] | None = None):
        self.ambient_rank = ambient_rank
        # relations stored as a matrix whose columns span the subgroup
        cols = relations or []
        for v in cols:
            if len(v) != ambient_rank:
                raise ValueError("relation vector of wrong length")
        self.relation_columns = [list(v) for v in cols]
        mat = [[v[i] for v in self.relation_columns] for i in range(ambient_rank)]
        if not mat:
            mat = [[] for _ in range(ambient_rank)]
        if ambient_rank == 0:
            mat = [[0 for _ in self.relation_columns]] if self.relation_columns else [[]]
            self._snf = None
        else:
            # guard against the zero-column case, SNF needs a rectangular shape
            if not self.relation_columns:
                mat = [[0] for _ in range(ambient_rank)]
            self._snf = SmithNormalForm(mat)
        diag = self._snf.diag if self._snf else []
        self._diag = [d for d in diag]

    def canonical_form(self, vec: list[int] | tuple[int, ...]) -> tuple[int, ...]:
        """Canonical coordinates of vec in the quotient group."""
        if len(vec) != self.ambient_rank:
            raise ValueError("vector of wrong length")
        if self.ambient_rank == 0:
            return ()
        y = mat_vec(self._snf.u, list(vec))
        out = []
        for i in range(self.ambient_rank):
            d = self._diag[i] if i < len(self._diag) else 0
            out.append(y[i] % d if d != 0 else y[i])
        return tuple(out)

    def from_canonical(self, y: tuple[int, ...]) -> list[int]:
        return mat_vec(self._snf.uinv, list(y)) if self.ambient_rank else []

    def contains(self, vec) -> bool:
        """Membership of vec in the relation subgroup."""
        return all(c == 0 for c in self.canonical_form(vec))

    def same_class(self, v1, v2) -> bool:
        return self.canonical_form(v1) == self.canonical_form(v2)

    def subgroup_preimage(self, vec) -> list[int] | None:
        """Some z with relations @ z = vec, or None if vec is not in the span."""
        if self.ambient_rank == 0:
            return [0] * len(self.relation_columns)
        if not self.relation_columns:
            return [] if all(c == 0 for c in vec) else None
        return self._snf.solve(list(vec))

    def fg_group(self) -> FgAbelianGroup:
        torsion = tuple(d for d in self._diag if d >= 2)
        rank = self.ambient_rank - sum(1 for d in self._diag if d != 0)
        return FgAbelianGroup(rank, torsion)

    def order(self) -> int | None:
        return self.fg_group().order()

    def coset_representatives(self) -> list[tuple[int, ...]]:
        """All coset representatives, lex-least in Smith coordinates.

        Only available when the quotient is finite.
        """
        group = self.fg_group()
        if group.free_rank:
            raise ValueError("coset representatives require a finite quotient")
        ranges = []
        for i in range(self.ambient_rank):
            d = self._diag[i] if i < len(self._diag) else 0
            ranges.append(range(d))
        reps = []
        for y in product(*ranges):
            reps.append(tuple(self.from_canonical(y)))
        return reps


@dataclass(frozen=True)
class LatticeMap:
    """An integer matrix between free presentations of two groups.

    ``matrix`` has shape (target.ambient_rank, source.ambient_rank) and must
    carry source relations into target relations to be well defined.
    """

    source: PresentedGroup
    target: PresentedGroup
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows, cols = shape([list(r) for r in self.matrix]) if self.matrix else (0, 0)
        if self.matrix and (rows != self.target.ambient_rank or cols != self.source.ambient_rank):
            raise ValueError("matrix shape inconsistent with presentations")
        for col in self.source.relation_columns:
            img = mat_vec([list(r) for r in self.matrix], col)
            if not self.target.contains(img):
                raise ValueError("matrix does not respect the presentations")

    def apply(self, vec) -> list[int]:
        return mat_vec([list(r) for r in self.matrix], list(vec))


def cokernel_group(f: LatticeMap):
    """Cokernel of f in canonical form, with order and coset representatives.

    Returns (group, order, representatives); representatives is None when the
    cokernel is infinite.
    """
    cols = [list(col) for col in f.target.relation_columns]
    mat = [list(r) for r in f.matrix]
    for j in range(f.source.ambient_rank):
        cols.append([mat[i][j] for i in range(f.target.ambient_rank)])
    quotient = PresentedGroup(f.target.ambient_rank, cols)
    group = quotient.fg_group()
    order = group.order()
    reps = quotient.coset_representatives() if order is not None else None
    return group, order, reps


def membership(matrix: list[list[int]], w: list[int]) -> list[int] | None:
    """Some u with matrix @ u = w, or None; free coordinates are zeroed."""
    rows, _cols = shape(matrix)
    if len(w) != rows:
        raise ValueError("vector of wrong length")
    return SmithNormalForm(matrix).solve(list(w))
