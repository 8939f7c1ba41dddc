"""The equivalence between graded modules over B and parabolic sheaves.

A graded module is a homogeneous presentation: generators with degrees in
Q^gp and relation rows whose entries are sums of coefficient-times-monomial
terms in the t and x symbols.  The functor in one direction takes degreewise
strands over the fundamental domain (the t symbols are invertible, so strands
at translated degrees are canonically identified); the functor back assembles
the slots of a parabolic sheaf into generators and turns its maps into action
relations.  Both round trips are verified constructively: the canonical
comparison map is built and checked for slotwise invertibility.

Everything here requires a simplicial root algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, UnsupportedOperationError, ValidationError
from .linalg import Matrix
from .monoid import word_add
from .parabolic import ParabolicMorphism, ParabolicSheaf, RModule, make_parabolic
from .poly import RingElement
from .rootalg import GradedRootAlgebra

# a term is (coefficient, t-exponents, x-exponents); an entry is a tuple of
# terms, all of the same degree


def term_degree(algebra: GradedRootAlgebra, tvec, qvec) -> tuple:
    return tuple(d * t + q for d, t, q in zip(algebra.degrees, tvec, qvec))


@dataclass(frozen=True)
class RelationRow:
    entries: tuple  # one entry (tuple of terms) per generator
    degree: tuple


class GradedPresentation:
    """Generators with Q^gp degrees and homogeneous relation rows."""

    def __init__(self, algebra: GradedRootAlgebra, gen_degrees, relations=()):
        algebra._require_simplicial()
        self.algebra = algebra
        self.ring = algebra.ring
        self.rank_q = len(algebra.degrees)
        self.gen_degrees = tuple(tuple(d) for d in gen_degrees)
        for d in self.gen_degrees:
            if len(d) != self.rank_q:
                raise InputError("generator degree of wrong length")
        rows = []
        for row in relations:
            rows.append(self._normalize_row(row))
        self.relations = tuple(rows)

    def _normalize_row(self, row) -> RelationRow:
        if isinstance(row, RelationRow):
            return row
        entries = []
        degree = None
        for a, entry in enumerate(row):
            terms = []
            for coef, tvec, qvec in entry:
                coef = self.ring.element(coef)
                if coef.is_zero:
                    continue
                tvec, qvec = tuple(tvec), tuple(qvec)
                if len(tvec) != self.rank_q or len(qvec) != self.rank_q:
                    raise InputError("term exponent vectors of wrong length")
                if any(q < 0 for q in qvec):
                    raise InputError("x-exponents must be non-negative")
                total = word_add(term_degree(self.algebra, tvec, qvec), self.gen_degrees[a])
                if degree is None:
                    degree = total
                elif degree != total:
                    raise ValidationError(
                        "relation row is not homogeneous",
                        locus={"generator": a, "expected": degree, "got": total},
                    )
                terms.append((coef, tvec, qvec))
            entries.append(tuple(terms))
        if degree is None:
            raise InputError("empty relation row")
        return RelationRow(tuple(entries), degree)

    @property
    def num_generators(self) -> int:
        return len(self.gen_degrees)

    def shift(self, v) -> "GradedPresentation":
        """N[v], graded by N[v]_w = N_{v+w}."""
        v = tuple(v)
        shifted = [tuple(a - b for a, b in zip(d, v)) for d in self.gen_degrees]
        out = GradedPresentation(self.algebra, shifted, ())
        out.relations = tuple(
            RelationRow(r.entries, tuple(a - b for a, b in zip(r.degree, v)))
            for r in self.relations
        )
        return out

    def __repr__(self):
        return f"GradedPresentation({self.num_generators} gens, {len(self.relations)} relations)"


def free_presentation(algebra: GradedRootAlgebra, degrees) -> GradedPresentation:
    return GradedPresentation(algebra, degrees, ())


def zero_presentation(algebra: GradedRootAlgebra) -> GradedPresentation:
    return GradedPresentation(algebra, (), ())


# ---------------------------------------------------------------------------
# strands


class Strand:
    """The degree-v part of a presentation, as a presented module.

    Coordinates correspond to generators (the canonical basis vector of
    B_{v - d_a}); relation strands are eliminated along unit pivots, which is
    a full reduction over a field and a partial normalisation over a
    polynomial ring.
    """

    def __init__(self, presentation: GradedPresentation, v):
        self.presentation = presentation
        self.algebra = presentation.algebra
        self.ring = presentation.ring
        self.v = tuple(v)
        n = presentation.num_generators
        rows = []
        for rel in presentation.relations:
            base = tuple(a - b for a, b in zip(self.v, rel.degree))
            vec = []
            for a in range(n):
                scalar = self.ring.zero()
                for coef, tvec, qvec in rel.entries[a]:
                    c, _ = self.algebra.chase(coef, tvec, qvec, base)
                    scalar = scalar + c
                vec.append(scalar)
            if any(not e.is_zero for e in vec):
                rows.append(vec)
        self._eliminate(rows, n)

    def _eliminate(self, rows, n):
        ring = self.ring
        rows = [list(r) for r in rows]
        order = []  # (col, expression row) in elimination order
        alive_rows = rows
        eliminated = set()
        while True:
            pivot = None
            for ri, row in enumerate(alive_rows):
                for c in range(n):
                    if c in eliminated:
                        continue
                    if row[c].is_unit:
                        pivot = (ri, c)
                        break
                if pivot:
                    break
            if not pivot:
                break
            ri, c = pivot
            row = alive_rows.pop(ri)
            inv = row[c].inverse_unit()
            expr = [-(inv * row[j]) if j != c else ring.zero() for j in range(n)]
            order.append((c, expr))
            eliminated.add(c)
            for other in alive_rows:
                if not other[c].is_zero:
                    f = other[c]
                    for j in range(n):
                        if j == c:
                            other[j] = ring.zero()
                        else:
                            other[j] = other[j] + f * expr[j]
        self.kept = [c for c in range(n) if c not in eliminated]
        self.kept_index = {c: i for i, c in enumerate(self.kept)}
        # resolve substitution chains by back-substitution
        resolved = {}
        for c, expr in reversed(order):
            out = {}
            for j in range(n):
                e = expr[j]
                if e.is_zero:
                    continue
                if j in resolved:
                    for k, val in resolved[j].items():
                        out[k] = out.get(k, self.ring.zero()) + e * val
                else:
                    out[j] = out.get(j, self.ring.zero()) + e
            resolved[c] = {k: val for k, val in out.items() if not val.is_zero}
        self._resolved = resolved
        final_rows = []
        for row in alive_rows:
            restricted = [row[c] for c in self.kept]
            if any(not e.is_zero for e in restricted):
                final_rows.append(restricted)
        if final_rows:
            self.relations = Matrix.from_rows(self.ring, final_rows)
        else:
            self.relations = None
        self.module = RModule(self.ring, len(self.kept), self.relations)

    @property
    def dim(self) -> int:
        return len(self.kept)

    def reduce(self, vec):
        """Express a coordinate vector in the kept basis."""
        out = [self.ring.zero()] * len(self.kept)
        for c, value in enumerate(vec):
            if value.is_zero:
                continue
            if c in self.kept_index:
                out[self.kept_index[c]] = out[self.kept_index[c]] + value
            else:
                for k, coeff in self._resolved[c].items():
                    out[self.kept_index[k]] = out[self.kept_index[k]] + value * coeff
        return out

    def is_zero_class(self, vec) -> bool:
        reduced = self.reduce(vec)
        from .parabolic import _vector_in_row_span

        return _vector_in_row_span(reduced, self.relations, self.ring)


# ---------------------------------------------------------------------------
# the functor to parabolic sheaves


def phi(n: GradedPresentation) -> ParabolicSheaf:
    """Degree-v strands over the fundamental domain, with x-action maps."""
    algebra = n.algebra
    domain = algebra.denominators.fundamental_domain
    strands = {v: Strand(n, v) for v in domain}
    slots = {v: strands[v].module for v in domain}
    maps = {}
    for v in domain:
        for g in range(n.rank_q):
            target_rep = algebra.denominators.fold(word_add(v, algebra.x_degree(g)))[0]
            src, tgt = strands[v], strands[target_rep]
            cols = []
            for c in src.kept:
                base = tuple(a - b for a, b in zip(v, n.gen_degrees[c]))
                scalar = algebra.structure_constant(base, g)
                coord = [n.ring.zero()] * n.num_generators
                coord[c] = scalar
                cols.append(tgt.reduce(coord))
            data = [[cols[j][i] for j in range(len(cols))] for i in range(tgt.dim)]
            maps[(v, g)] = Matrix(n.ring, tgt.dim, src.dim, data)
    return make_parabolic(algebra, slots, maps)


def phi_strands(n: GradedPresentation):
    """The strand spaces used by phi, for callers needing the bookkeeping."""
    domain = n.algebra.denominators.fundamental_domain
    return {v: Strand(n, v) for v in domain}


# ---------------------------------------------------------------------------
# the functor back to graded modules


def psi(e: ParabolicSheaf) -> GradedPresentation:
    """Slot generators in their slot degrees plus action relations."""
    algebra = e.algebra
    ring = e.ring
    gens = []  # (slot rep, index)
    degrees = []
    index = {}
    for v in e.domain:
        mod = e.slots[v]
        for k in range(mod.rank):
            index[(v, k)] = len(gens)
            gens.append((v, k))
            degrees.append(v)
    rows = []
    zero_t = (0,) * e.rank
    zero_q = (0,) * e.rank
    for v in e.domain:
        mod = e.slots[v]
        if mod.relations is not None:
            for r in range(mod.relations.rows):
                entries = [() for _ in gens]
                for k in range(mod.rank):
                    coef = mod.relations[r, k]
                    if not coef.is_zero:
                        entries[index[(v, k)]] = ((coef, zero_t, zero_q),)
                rows.append((entries, v))
        for g in range(e.rank):
            mat = e.map(v, g)
            v2, shift = algebra.denominators.fold(word_add(v, algebra.x_degree(g)))
            for k in range(mod.rank):
                entries = [[] for _ in gens]
                entries[index[(v, k)]].append((ring.one(), zero_t, tuple(algebra.x_degree(g))))
                for b in range(e.slots[v2].rank):
                    coef = mat[b, k]
                    if not coef.is_zero:
                        entries[index[(v2, b)]].append((-coef, shift, zero_q))
                rows.append(([tuple(ent) for ent in entries], word_add(v, algebra.x_degree(g))))
    presentation = GradedPresentation(algebra, degrees, ())
    normalized = []
    for entries, degree in rows:
        if all(not entry for entry in entries):
            continue
        row = presentation._normalize_row(entries)
        if row.degree != tuple(degree):
            raise ValidationError("action row has unexpected degree")
        normalized.append(row)
    presentation.relations = tuple(normalized)
    presentation.slot_generators = index
    return presentation


def psi_on_morphism(phi_map: ParabolicMorphism, n_src: GradedPresentation, n_tgt: GradedPresentation):
    """The graded map between psi-images induced slotwise by a morphism."""
    images = []
    src_index = n_src.slot_generators
    tgt_index = n_tgt.slot_generators
    zero_t = (0,) * phi_map.source.rank
    zero_q = (0,) * phi_map.source.rank
    for (v, k), _ in sorted(src_index.items(), key=lambda kv: kv[1]):
        mat = phi_map.components[v]
        terms = []
        for b in range(phi_map.target.slots[v].rank):
            coef = mat[b, k]
            if not coef.is_zero:
                terms.append((coef, zero_t, zero_q, tgt_index[(v, b)]))
        images.append(tuple(terms))
    return GradedMap(n_src, n_tgt, images)


# ---------------------------------------------------------------------------
# graded maps and the constructive iso tests


class GradedMap:
    """A degree-preserving map given on generators.

    ``images[a]`` is a tuple of (coef, tvec, qvec, target_generator) terms,
    each of degree source_degree(a) - target_degree(b) as a monomial.
    """

    def __init__(self, source: GradedPresentation, target: GradedPresentation, images):
        self.source = source
        self.target = target
        self.algebra = source.algebra
        self.ring = source.ring
        self.images = tuple(tuple(img) for img in images)
        if len(self.images) != source.num_generators:
            raise InputError("one image per source generator required")
        for a, img in enumerate(self.images):
            for coef, tvec, qvec, b in img:
                want = self.source.gen_degrees[a]
                got = word_add(term_degree(self.algebra, tvec, qvec), self.target.gen_degrees[b])
                if tuple(want) != tuple(got):
                    raise ValidationError(
                        "graded map image is not degree preserving",
                        locus={"generator": a, "expected": want, "got": got},
                    )

    def strand_matrix(self, v, src_strand: Strand | None = None, tgt_strand: Strand | None = None) -> Matrix:
        v = tuple(v)
        src = src_strand or Strand(self.source, v)
        tgt = tgt_strand or Strand(self.target, v)
        cols = []
        for c in src.kept:
            base = tuple(x - y for x, y in zip(v, self.source.gen_degrees[c]))
            coord = [self.ring.zero()] * self.target.num_generators
            for coef, tvec, qvec, b in self.images[c]:
                scalar, _ = self.algebra.chase(coef, tvec, qvec, base)
                coord[b] = coord[b] + scalar
            cols.append(tgt.reduce(coord))
        data = [[cols[j][i] for j in range(len(cols))] for i in range(tgt.dim)]
        return Matrix(self.ring, tgt.dim, src.dim, data)

    def well_defined(self) -> bool:
        """Do source relations map into the target relation submodule?"""
        for rel in self.source.relations:
            coord = [self.ring.zero()] * self.target.num_generators
            for a in range(self.source.num_generators):
                for coef, tvec, qvec in rel.entries[a]:
                    for coef2, tvec2, qvec2, b in self.images[a]:
                        c = coef * coef2
                        t = word_add(tvec, tvec2)
                        q = word_add(qvec, qvec2)
                        scalar, _ = self.algebra.chase(c, t, q, (0,) * self.source.rank_q)
                        coord[b] = coord[b] + scalar
            if not Strand(self.target, rel.degree).is_zero_class(coord):
                return False
        return True


def tensor_presentations(n1: GradedPresentation, n2: GradedPresentation) -> GradedPresentation:
    """Generators are pairs with degree sums; relations are rel (x) gen."""
    if n1.algebra is not n2.algebra and n1.algebra.denominators.fundamental_domain != n2.algebra.denominators.fundamental_domain:
        raise InputError("tensor requires a common algebra")
    algebra = n1.algebra
    pairs = [(a, b) for a in range(n1.num_generators) for b in range(n2.num_generators)]
    index = {p: i for i, p in enumerate(pairs)}
    degrees = [word_add(n1.gen_degrees[a], n2.gen_degrees[b]) for a, b in pairs]
    out = GradedPresentation(algebra, degrees, ())
    rows = []
    for rel in n1.relations:
        for b in range(n2.num_generators):
            entries = [() for _ in pairs]
            for a in range(n1.num_generators):
                if rel.entries[a]:
                    entries[index[(a, b)]] = rel.entries[a]
            rows.append(RelationRow(tuple(entries), word_add(rel.degree, n2.gen_degrees[b])))
    for rel in n2.relations:
        for a in range(n1.num_generators):
            entries = [() for _ in pairs]
            for b in range(n2.num_generators):
                if rel.entries[b]:
                    entries[index[(a, b)]] = rel.entries[b]
            rows.append(RelationRow(tuple(entries), word_add(rel.degree, n1.gen_degrees[a])))
    out.relations = tuple(rows)
    return out


def tensor_map(m1: GradedMap, m2: GradedMap, src: GradedPresentation, tgt: GradedPresentation) -> GradedMap:
    """The tensor of two graded maps on tensor presentations."""
    n1s, n2s = m1.source, m2.source
    n1t, n2t = m1.target, m2.target
    tgt_index = {
        (a, b): a * n2t.num_generators + b
        for a in range(n1t.num_generators)
        for b in range(n2t.num_generators)
    }
    images = []
    for a in range(n1s.num_generators):
        for b in range(n2s.num_generators):
            terms = []
            for c1, t1, q1, x in m1.images[a]:
                for c2, t2, q2, y in m2.images[b]:
                    terms.append((c1 * c2, word_add(t1, t2), word_add(q1, q2), tgt_index[(x, y)]))
            images.append(tuple(terms))
    return GradedMap(src, tgt, images)


# ---------------------------------------------------------------------------
# round trips


@dataclass
class RoundtripReport:
    direction: str
    iso: bool
    witnesses: dict  # slot -> Matrix
    failure: dict | None = None


def _same_row_span(a: Matrix | None, b: Matrix | None, ring) -> bool:
    from .parabolic import _vector_in_row_span

    rows_a = [a.row(i) for i in range(a.rows)] if a is not None else []
    rows_b = [b.row(i) for i in range(b.rows)] if b is not None else []
    for row in rows_a:
        if not _vector_in_row_span(row, b, ring):
            return False
    for row in rows_b:
        if not _vector_in_row_span(row, a, ring):
            return False
    return True


def roundtrip_phi_psi(e: ParabolicSheaf) -> RoundtripReport:
    """E -> Phi(Psi(E)) via the identity on chosen generators."""
    n = psi(e)
    strands = phi_strands(n)
    e2 = phi(n)
    witnesses = {}
    for v in e.domain:
        strand = strands[v]
        cols = []
        for k in range(e.slots[v].rank):
            coord = [e.ring.zero()] * n.num_generators
            coord[n.slot_generators[(v, k)]] = e.ring.one()
            cols.append(strand.reduce(coord))
        data = [[cols[j][i] for j in range(len(cols))] for i in range(strand.dim)]
        witnesses[v] = Matrix(e.ring, strand.dim, e.slots[v].rank, data)
    for v in e.domain:
        mat = witnesses[v]
        if not (mat.rows == mat.cols and (not e.ring.is_field or mat.is_invertible())):
            return RoundtripReport("phi-psi", False, witnesses, {"slot": v})
        if not e.ring.is_field:
            # polynomial tier: the unit map must be the identity on generators
            # and the relation submodules must coincide
            if mat != Matrix.identity(e.ring, mat.rows):
                return RoundtripReport("phi-psi", False, witnesses, {"slot": v})
            if not _same_row_span(e.slots[v].relations, e2.slots[v].relations, e.ring):
                return RoundtripReport("phi-psi", False, witnesses, {"slot": v, "kind": "relations"})
    # the unit map must be a morphism of parabolic sheaves
    for v in e.domain:
        for g in range(e.rank):
            w = e.step(v, g)
            lhs = witnesses[w] @ e.map(v, g)
            rhs = e2.map(v, g) @ witnesses[v]
            if lhs != rhs:
                from .parabolic import matrices_equal_mod

                if not matrices_equal_mod(lhs, rhs, e2.slots[w]):
                    return RoundtripReport(
                        "phi-psi", False, witnesses, {"slot": v, "generator": g, "kind": "naturality"}
                    )
    return RoundtripReport("phi-psi", True, witnesses)


def canonical_unit_map(n: GradedPresentation, n2: GradedPresentation | None = None) -> GradedMap:
    """The canonical map N -> Psi(Phi(N)) on generators."""
    if n2 is None:
        n2 = psi(phi(n))
    algebra = n.algebra
    e_strands = phi_strands(n)
    images = []
    zero_q = (0,) * n.rank_q
    for a in range(n.num_generators):
        rep, shift = algebra.denominators.fold(n.gen_degrees[a])
        strand = e_strands[rep]
        coord = [n.ring.zero()] * n.num_generators
        coord[a] = n.ring.one()
        reduced = strand.reduce(coord)
        terms = []
        for b, coef in enumerate(reduced):
            if not coef.is_zero:
                terms.append((coef, shift, zero_q, n2.slot_generators[(rep, b)]))
        images.append(tuple(terms))
    return GradedMap(n, n2, images)


def roundtrip_psi_phi(n: GradedPresentation) -> RoundtripReport:
    """N -> Psi(Phi(N)): well-definedness plus strandwise invertibility."""
    n2 = psi(phi(n))
    alpha = canonical_unit_map(n, n2)
    if not alpha.well_defined():
        return RoundtripReport("psi-phi", False, {}, {"kind": "not well defined"})
    witnesses = {}
    domain = n.algebra.denominators.fundamental_domain
    for v in domain:
        mat = alpha.strand_matrix(v)
        witnesses[v] = mat
        ok = mat.rows == mat.cols and (not n.ring.is_field or mat.is_invertible())
        if not ok:
            return RoundtripReport("psi-phi", False, witnesses, {"slot": v})
    return RoundtripReport("psi-phi", True, witnesses)


def roundtrip_check(obj, direction: str | None = None) -> RoundtripReport:
    if isinstance(obj, ParabolicSheaf):
        return roundtrip_phi_psi(obj)
    if isinstance(obj, GradedPresentation):
        return roundtrip_psi_phi(obj)
    raise InputError("roundtrip_check expects a parabolic sheaf or a graded presentation")


# ---------------------------------------------------------------------------
# hom dimensions on the graded side, and monoidal compatibility


def graded_hom_dimension(n1: GradedPresentation, n2: GradedPresentation, v=None) -> int:
    """Dimension of degree-v graded module maps N1 -> N2 by direct solve."""
    if not n1.ring.is_field:
        raise UnsupportedOperationError("graded hom dimensions require field coefficients")
    algebra = n1.algebra
    ring = n1.ring
    v = tuple(v) if v is not None else (0,) * n1.rank_q
    tgt_strands = {}

    def strand_at(w):
        w = tuple(w)
        if w not in tgt_strands:
            tgt_strands[w] = Strand(n2, w)
        return tgt_strands[w]

    offsets = []
    total = 0
    for a in range(n1.num_generators):
        s = strand_at(word_add(n1.gen_degrees[a], v))
        offsets.append((total, s))
        total += s.dim
    equations = []
    for rel in n1.relations:
        tgt = strand_at(word_add(rel.degree, v))
        rows_block = [[ring.zero()] * total for _ in range(tgt.dim)]
        for a in range(n1.num_generators):
            if not rel.entries[a]:
                continue
            off, src = offsets[a]
            for k_idx, c in enumerate(src.kept):
                # image of basis vector k under multiplication by the entry
                coord = [ring.zero()] * n2.num_generators
                base = tuple(
                    x - y for x, y in zip(word_add(n1.gen_degrees[a], v), n2.gen_degrees[c])
                )
                for coef, tvec, qvec in rel.entries[a]:
                    scalar, _ = algebra.chase(coef, tvec, qvec, base)
                    coord[c] = coord[c] + scalar
                reduced = tgt.reduce(coord)
                for i in range(tgt.dim):
                    rows_block[i][off + k_idx] = rows_block[i][off + k_idx] + reduced[i]
        for row in rows_block:
            if any(not e.is_zero for e in row):
                equations.append(row)
    if total == 0:
        return 0
    if not equations:
        return total
    mat = Matrix.from_rows(ring, equations)
    return total - mat.rank()


@dataclass
class MonoidalReport:
    iso: bool
    hom_dims_match: bool
    witnesses: dict
    detail: dict


def monoidal_compat_check(n1: GradedPresentation, n2: GradedPresentation) -> MonoidalReport:
    """Phi(N1 (x) N2) compared with Phi(N1) (x) Phi(N2), plus hom dimensions."""
    algebra = n1.algebra
    t_direct = tensor_presentations(n1, n2)
    e1, e2 = phi(n1), phi(n2)
    n1_back, n2_back = psi(e1), psi(e2)
    t_back = tensor_presentations(n1_back, n2_back)
    gamma = tensor_map(
        canonical_unit_map(n1, n1_back),
        canonical_unit_map(n2, n2_back),
        t_direct,
        t_back,
    )
    witnesses = {}
    iso = gamma.well_defined()
    detail = {}
    domain = algebra.denominators.fundamental_domain
    if iso:
        for v in domain:
            mat = gamma.strand_matrix(v)
            witnesses[v] = mat
            if not (mat.rows == mat.cols and mat.is_invertible()):
                iso = False
                detail["slot"] = v
                break
    hom_ok = True
    from .parabolic import hom_dimension

    for v in domain:
        lhs = graded_hom_dimension(n1, n2, v)
        rhs = hom_dimension(e1, e2, v)
        detail.setdefault("hom_dims", {})[v] = (lhs, rhs)
        if lhs != rhs:
            hom_ok = False
    return MonoidalReport(iso, hom_ok, witnesses, detail)
