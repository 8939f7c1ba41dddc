"""Parabolic sheaves in chart form.

A parabolic sheaf over a simplicial root algebra stores one module per
fundamental-domain slot and one matrix per slot and Q-generator; the
pseudo-period identifications are strictified away, so validity reduces to
two checks: the generator maps commute, and the composite realizing a full
period in the i-th direction equals multiplication by the chart value f_i.

Modules are finite dimensional vector spaces over a field (tier 1), or free
or presented modules over a polynomial ring (tier 2, with operations
restricted as documented per function).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, UnsupportedOperationError, ValidationError
from .linalg import Matrix
from .monoid import FpMonoid, word_add
from .poly import BaseRing
from .rootalg import GradedRootAlgebra


@dataclass(frozen=True)
class RModule:
    """rank generators over ring, modulo the rows of ``relations`` (if any)."""

    ring: BaseRing
    rank: int
    relations: Matrix | None = None

    def __post_init__(self):
        if self.rank < 0:
            raise InputError("negative rank")
        if self.relations is not None and self.relations.cols != self.rank:
            raise InputError("relation row length must equal the rank")

    @property
    def is_free(self) -> bool:
        return self.relations is None or self.relations.rows == 0

    @property
    def is_zero(self) -> bool:
        return self.rank == 0

    def describe(self) -> str:
        if self.rank == 0:
            return "0"
        base = f"free rank {self.rank}" if self.is_free else f"rank {self.rank} with relations {self.relations}"
        return base


def _vector_in_row_span(vec, relations: Matrix | None, ring: BaseRing) -> bool:
    """Is vec an R-combination of the relation rows?

    Exact over fields.  Over polynomial rings only relation matrices whose
    rows touch a single coordinate each (diagonal shape) are decided; other
    shapes raise UnsupportedOperationError.
    """
    if all(e.is_zero for e in vec):
        return True
    if relations is None or relations.rows == 0:
        return False
    if ring.is_field:
        sol = relations.transpose().solve(list(vec))
        return sol is not None
    owner = {}
    for r in range(relations.rows):
        support = [c for c in range(relations.cols) if not relations[r, c].is_zero]
        if len(support) != 1:
            raise UnsupportedOperationError(
                "membership modulo a non-diagonal relation matrix over a "
                "polynomial ring is not supported"
            )
        owner.setdefault(support[0], relations[r, support[0]])
    for c, entry in enumerate(vec):
        if entry.is_zero:
            continue
        if c not in owner or entry.try_divide(owner[c]) is None:
            return False
    return True


def matrices_equal_mod(a: Matrix, b: Matrix, target: RModule) -> bool:
    """Matrix equality as maps into a presented module."""
    diff = a - b
    for j in range(diff.cols):
        if not _vector_in_row_span(diff.column(j), target.relations, target.ring):
            return False
    return True


class WeightCategory:
    """Objects: elements of Q^gp; an arrow v -> v' is an element of Q shifting
    the weight; for integral Q this is a partial order."""

    def __init__(self, q_monoid: FpMonoid):
        self.q_monoid = q_monoid
        self.group = q_monoid.presented_group()

    def arrow(self, v, v_prime, *, bounds=None):
        """(exists, witness) for an arrow v -> v'; witness is a Q-word."""
        from .monoid import SubmonoidGens, submonoid_contains
        from .bounds import DEFAULT_BOUNDS
        from .diophantine import minimal_inhomogeneous_solutions

        bounds = bounds or self.q_monoid.bounds
        v = tuple(v)
        v_prime = tuple(v_prime)
        diff = [a - b for a, b in zip(v_prime, v)]
        if self.q_monoid.classify().integral:
            cols = self.group.relation_columns
            k = len(cols)
            rows = []
            n = self.q_monoid.num_generators
            for i in range(n):
                row = [1 if j == i else 0 for j in range(n)]
                row += [col[i] for col in cols]
                row += [-col[i] for col in cols]
                rows.append(row)
            sols = minimal_inhomogeneous_solutions(rows, diff, bounds=bounds)
            if not sols:
                return False, None
            return True, min((s[:n] for s in sols))
        for q in self.q_monoid.ball(bounds.search_bound):
            if self.group.canonical_form([a + b for a, b in zip(v, q)]) == self.group.canonical_form(list(v_prime)):
                return True, q
        return None, None


def weight_arrow(w: WeightCategory, v, v_prime, *, bounds=None):
    return w.arrow(v, v_prime, bounds=bounds)


class ParabolicSheaf:
    """Slots over the fundamental domain plus generator maps; validated."""

    def __init__(self, algebra: GradedRootAlgebra, slots, maps, *, validate: bool = True):
        algebra._require_simplicial()
        self.algebra = algebra
        self.ring = algebra.ring
        self.domain = algebra.denominators.fundamental_domain
        self.rank = len(algebra.degrees)
        slots = dict(slots)
        maps = dict(maps)
        for v in self.domain:
            if v not in slots:
                raise InputError(f"missing slot at {algebra.denominators.degree_str(v)}")
        self.slots = {v: slots[v] for v in self.domain}
        self.maps = {}
        for v in self.domain:
            for g in range(self.rank):
                key = (v, g)
                if key not in maps:
                    raise InputError(
                        f"missing map at slot {algebra.denominators.degree_str(v)}, "
                        f"generator {algebra.q_monoid.names[g]}"
                    )
                self.maps[key] = maps[key]
        if validate:
            self.validate()

    # -- helpers

    def fold_rep(self, w) -> tuple:
        return self.algebra.denominators.fold(tuple(w))[0]

    def step(self, v, g: int) -> tuple:
        """Target slot of the g-map out of slot v."""
        return self.fold_rep(word_add(v, self.algebra.x_degree(g)))

    def map(self, v, g: int) -> Matrix:
        return self.maps[(tuple(v), g)]

    def slot(self, v) -> RModule:
        return self.slots[tuple(v)]

    def composite_along(self, v, q_word) -> Matrix:
        """Composite of generator maps realizing the Q-word from slot v."""
        current = tuple(v)
        out = Matrix.identity(self.ring, self.slots[current].rank)
        for g, count in enumerate(q_word):
            for _ in range(count):
                out = self.map(current, g) @ out
                current = self.step(current, g)
        return out

    @property
    def is_zero(self) -> bool:
        return all(m.is_zero for m in self.slots.values())

    def dims(self) -> tuple:
        return tuple(self.slots[v].rank for v in self.domain)

    # -- validation

    def validate(self):
        for v in self.domain:
            for g in range(self.rank):
                mat = self.maps[(v, g)]
                src, tgt = self.slots[v], self.slots[self.step(v, g)]
                if mat.rows != tgt.rank or mat.cols != src.rank:
                    raise ValidationError(
                        "map shape mismatch",
                        locus={"kind": "shape", "slot": v, "generator": g},
                    )
                if not src.is_free:
                    # well-definedness: relation rows must map into relations
                    image = mat @ src.relations.transpose()
                    for j in range(image.cols):
                        if not _vector_in_row_span(image.column(j), tgt.relations, self.ring):
                            raise ValidationError(
                                "map does not descend to the presented slot",
                                locus={"kind": "well-defined", "slot": v, "generator": g},
                            )
        # commutation of the generator directions
        for v in self.domain:
            for g1 in range(self.rank):
                for g2 in range(g1 + 1, self.rank):
                    left = self.map(self.step(v, g1), g2) @ self.map(v, g1)
                    right = self.map(self.step(v, g2), g1) @ self.map(v, g2)
                    tgt = self.slots[self.step(self.step(v, g1), g2)]
                    if not matrices_equal_mod(left, right, tgt):
                        raise ValidationError(
                            "generator maps do not commute",
                            locus={
                                "kind": "relation",
                                "slot": v,
                                "generators": (g1, g2),
                                "lhs": left,
                                "rhs": right,
                            },
                        )
        # period law: a full period in direction i acts by the chart value
        for i in range(self.rank):
            f_i = self.algebra.values[i]
            period = tuple(
                self.algebra.degrees[i] if k == i else 0 for k in range(self.rank)
            )
            for v in self.domain:
                comp = self.composite_along(v, period)
                want = Matrix.scalar(self.ring, self.slots[v].rank, f_i)
                if not matrices_equal_mod(comp, want, self.slots[v]):
                    raise ValidationError(
                        "period composite differs from the chart value",
                        locus={
                            "kind": "period",
                            "slot": v,
                            "generator": i,
                            "lhs": comp,
                            "rhs": want,
                        },
                    )

    def __repr__(self):
        d = self.algebra.denominators
        parts = ", ".join(f"{d.degree_str(v)}:{self.slots[v].rank}" for v in self.domain)
        return f"ParabolicSheaf({parts})"


def make_parabolic(algebra: GradedRootAlgebra, slots, maps) -> ParabolicSheaf:
    return ParabolicSheaf(algebra, slots, maps, validate=True)


def zero_sheaf(algebra: GradedRootAlgebra) -> ParabolicSheaf:
    domain = algebra.denominators.fundamental_domain
    slots = {v: RModule(algebra.ring, 0) for v in domain}
    maps = {}
    for v in domain:
        for g in range(len(algebra.degrees)):
            maps[(v, g)] = Matrix.zero(algebra.ring, 0, 0)
    return ParabolicSheaf(algebra, slots, maps, validate=False)


class ParabolicMorphism:
    """One matrix per slot, commuting with every generator map."""

    def __init__(self, source: ParabolicSheaf, target: ParabolicSheaf, components, *, validate: bool = True):
        if source.algebra is not target.algebra and source.algebra.denominators.fundamental_domain != target.algebra.denominators.fundamental_domain:
            raise InputError("morphism between sheaves over different algebras")
        self.source = source
        self.target = target
        self.components = {tuple(v): m for v, m in dict(components).items()}
        for v in source.domain:
            mat = self.components.get(v)
            if mat is None or mat.rows != target.slots[v].rank or mat.cols != source.slots[v].rank:
                raise InputError(f"component at {v} missing or of wrong shape")
        if validate:
            bad = self.violated_square()
            if bad is not None:
                raise ValidationError("morphism does not commute with the maps", locus=bad)

    def violated_square(self):
        for v in self.source.domain:
            for g in range(self.source.rank):
                w = self.source.step(v, g)
                lhs = self.components[w] @ self.source.map(v, g)
                rhs = self.target.map(v, g) @ self.components[v]
                if not matrices_equal_mod(lhs, rhs, self.target.slots[w]):
                    return {"slot": v, "generator": g, "lhs": lhs, "rhs": rhs}
        return None

    def compose(self, inner: "ParabolicMorphism") -> "ParabolicMorphism":
        if inner.target is not self.source:
            raise InputError("composition mismatch")
        comps = {v: self.components[v] @ inner.components[v] for v in self.source.domain}
        return ParabolicMorphism(inner.source, self.target, comps, validate=False)

    @classmethod
    def identity(cls, sheaf: ParabolicSheaf) -> "ParabolicMorphism":
        comps = {v: Matrix.identity(sheaf.ring, sheaf.slots[v].rank) for v in sheaf.domain}
        return cls(sheaf, sheaf, comps, validate=False)

    def is_isomorphism(self) -> bool:
        return all(self.components[v].is_invertible() for v in self.source.domain)

    def __eq__(self, other):
        return (
            isinstance(other, ParabolicMorphism)
            and other.components == self.components
        )


def twist(e: ParabolicSheaf, v) -> ParabolicSheaf:
    """The twist E[v]: slot at v' is the slot of E at fold(v + v')."""
    v = tuple(v)
    algebra = e.algebra
    slots = {}
    maps = {}
    for rep in e.domain:
        src = e.fold_rep(word_add(v, rep))
        slots[rep] = e.slots[src]
        for g in range(e.rank):
            maps[(rep, g)] = e.map(src, g)
    return ParabolicSheaf(algebra, slots, maps, validate=False)


def direct_sum(a: ParabolicSheaf, b: ParabolicSheaf) -> ParabolicSheaf:
    if a.algebra is not b.algebra and a.domain != b.domain:
        raise InputError("direct sum requires a common algebra")
    ring = a.ring
    slots = {}
    maps = {}
    for v in a.domain:
        if not (a.slots[v].is_free and b.slots[v].is_free):
            raise UnsupportedOperationError("direct sums only for free slots")
        slots[v] = RModule(ring, a.slots[v].rank + b.slots[v].rank)
    for v in a.domain:
        for g in range(a.rank):
            ma, mb = a.map(v, g), b.map(v, g)
            rows = ma.rows + mb.rows
            cols = ma.cols + mb.cols
            data = [[ring.zero()] * cols for _ in range(rows)]
            for i in range(ma.rows):
                for j in range(ma.cols):
                    data[i][j] = ma[i, j]
            for i in range(mb.rows):
                for j in range(mb.cols):
                    data[ma.rows + i][ma.cols + j] = mb[i, j]
            maps[(v, g)] = Matrix(ring, rows, cols, data)
    return ParabolicSheaf(a.algebra, slots, maps, validate=False)


# ---------------------------------------------------------------------------
# internal Hom


def _require_tier1(sheaf: ParabolicSheaf):
    if not sheaf.ring.is_field:
        raise UnsupportedOperationError("this operation requires field coefficients")


class _HomBasis:
    """Solution basis of the parabolic-morphism equations E -> F[v]."""

    def __init__(self, e: ParabolicSheaf, f: ParabolicSheaf, v):
        self.e = e
        self.f = f
        self.v = tuple(v)
        ring = e.ring
        domain = e.domain
        # unknowns: entries of phi_w (target rows x source cols), per w
        offsets = {}
        total = 0
        for w in domain:
            rows = f.slots[e.fold_rep(word_add(self.v, w))].rank
            cols = e.slots[w].rank
            offsets[w] = (total, rows, cols)
            total += rows * cols
        self.offsets = offsets
        self.total = total
        equations = []
        for w in domain:
            for g in range(e.rank):
                w2 = e.step(w, g)
                f_src = e.fold_rep(word_add(self.v, w))
                me = e.map(w, g)  # E_w -> E_w2
                mf = f.map(f_src, g)  # F_{v+w} -> F_{v+w2}
                rows2 = f.slots[e.fold_rep(word_add(self.v, w2))].rank
                cols_w = e.slots[w].rank
                # phi_{w2} @ me - mf @ phi_w = 0, entrywise
                for i in range(rows2):
                    for j in range(cols_w):
                        row = [ring.zero()] * total
                        off2, r2, c2 = offsets[w2]
                        for k in range(c2):
                            row[off2 + i * c2 + k] = row[off2 + i * c2 + k] + me[k, j]
                        off1, r1, c1 = offsets[w]
                        for k in range(r1):
                            row[off1 + k * c1 + j] = row[off1 + k * c1 + j] - mf[i, k]
                        if any(not x.is_zero for x in row):
                            equations.append(row)
        if equations:
            mat = Matrix.from_rows(ring, equations)
            self.basis = mat.nullspace()
        else:
            self.basis = [
                [ring.one() if i == k else ring.zero() for i in range(total)]
                for k in range(total)
            ]

    def vector_to_components(self, vec):
        comps = {}
        for w, (off, rows, cols) in self.offsets.items():
            data = [[vec[off + i * cols + j] for j in range(cols)] for i in range(rows)]
            comps[w] = Matrix(self.e.ring, rows, cols, data)
        return comps

    @property
    def dim(self):
        return len(self.basis)


def parabolic_hom(e: ParabolicSheaf, f: ParabolicSheaf) -> ParabolicSheaf:
    """The internal Hom sheaf: slot at v is the space of maps E -> F[v]."""
    _require_tier1(e)
    _require_tier1(f)
    algebra = e.algebra
    ring = e.ring
    bases = {v: _HomBasis(e, f, v) for v in e.domain}
    slots = {v: RModule(ring, bases[v].dim) for v in e.domain}
    maps = {}
    for v in e.domain:
        for g in range(e.rank):
            v2 = e.step(v, g)
            src_b, tgt_b = bases[v], bases[v2]
            cols = []
            for vec in src_b.basis:
                comps = src_b.vector_to_components(vec)
                # post-compose with the F-direction map
                image = [ring.zero()] * tgt_b.total
                for w in e.domain:
                    f_src = e.fold_rep(word_add(v, w))
                    mf = f.map(f_src, g)
                    pushed = mf @ comps[w]
                    off, rows, ncols = tgt_b.offsets[w]
                    for i in range(rows):
                        for j in range(ncols):
                            image[off + i * ncols + j] = pushed[i, j]
                cols.append(image)
            if tgt_b.basis:
                bmat = Matrix(
                    ring,
                    tgt_b.total,
                    len(tgt_b.basis),
                    [[tgt_b.basis[k][i] for k in range(len(tgt_b.basis))] for i in range(tgt_b.total)],
                )
                out_cols = []
                for image in cols:
                    sol = bmat.solve(image)
                    if sol is None:
                        raise ValidationError("hom connecting map left the solution space")
                    out_cols.append(sol)
                data = [[out_cols[j][i] for j in range(len(out_cols))] for i in range(len(tgt_b.basis))]
                maps[(v, g)] = Matrix(ring, len(tgt_b.basis), len(out_cols), data)
            else:
                maps[(v, g)] = Matrix.zero(ring, 0, len(cols))
    return ParabolicSheaf(algebra, slots, maps, validate=True)


def hom_dimension(e: ParabolicSheaf, f: ParabolicSheaf, v=None) -> int:
    """dim Hom(E, F[v]) over the base field (v defaults to 0)."""
    _require_tier1(e)
    v = tuple(v) if v is not None else (0,) * e.rank
    return _HomBasis(e, f, v).dim


def global_homs(e: ParabolicSheaf, f: ParabolicSheaf):
    """A basis of parabolic morphisms E -> F."""
    _require_tier1(e)
    basis = _HomBasis(e, f, (0,) * e.rank)
    out = []
    for vec in basis.basis:
        comps = basis.vector_to_components(vec)
        out.append(ParabolicMorphism(e, f, comps, validate=False))
    return out


def parabolic_tensor(e: ParabolicSheaf, f: ParabolicSheaf) -> ParabolicSheaf:
    """Tensor product, computed through the graded-module side."""
    _require_tier1(e)
    from . import equivalence

    ne = equivalence.psi(e)
    nf = equivalence.psi(f)
    return equivalence.phi(equivalence.tensor_presentations(ne, nf))


def unit_sheaf(algebra: GradedRootAlgebra) -> ParabolicSheaf:
    """The unit object: the image of the free rank-one module in degree 0."""
    from . import equivalence

    return equivalence.phi(equivalence.free_presentation(algebra, [(0,) * len(algebra.degrees)]))
