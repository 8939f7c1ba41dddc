"""The graded coordinate algebra of a root construction.

Given a chart f on P and a verified Kummer map j: P -> Q, the algebra is

    B = R[P^gp] (x)_{Z[P]} Z[Q],

presented by invertible symbols t^u (u a basis of P^gp), symbols x^g (g the
Q-generators), and the homogeneous relations x^{j(p)} = f(p) t^{p} together
with the relations of Q and of P^gp.  Degrees live in Q^gp.

In the simplicial case (free P, Q of the same rank, diagonal j) every graded
piece is free of rank one on a canonical monomial and multiplication by x^g
acts through explicit structure constants; this is the case the equivalence
machinery relies on.  General integral systems get bounded piece
presentations with an explicit completeness caveat.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .bounds import Bounds
from .chart import KatoChart, chart_kernel
from .errors import InputError, ResourceError, UnsupportedOperationError, ValidationError
from .kummer import DenominatorSystem, induced_kernel
from .linalg import Matrix
from .monoid import SubmonoidGens, quotient, word_add, word_ball, grlex_key
from .poly import RingElement


@dataclass
class GradedPiece:
    degree: tuple
    generators: tuple  # monomial data: (t_exponents, x_exponents) per generator
    relations: "Matrix"  # rows are R-linear relations among the generators
    rank_hint: int
    complete: bool


class GradedRootAlgebra:
    """Presentation of B with its Q^gp-grading and structure constants."""

    def __init__(self, chart: KatoChart, denominators: DenominatorSystem, *, bounds: Bounds | None = None):
        if chart.monoid != denominators.j.source:
            raise InputError("chart monoid and denominator source differ")
        self.chart = chart
        self.denominators = denominators
        self.ring = chart.ring
        self.bounds = bounds or denominators.bounds
        self.j = denominators.j
        self.p_monoid = self.j.source
        self.q_monoid = self.j.target
        self.simplicial = denominators.simplicial
        self._validate_faithfulness()
        if self.simplicial:
            self.degrees = denominators.degrees
            self.values = chart.values
            self._constants = {}

    # -- Remark-level sanity: the chart quotient embeds into the extended one

    def _validate_faithfulness(self):
        k_a = chart_kernel(self.chart, bounds=self.bounds)
        k_b = induced_kernel(self.denominators, k_a, bounds=self.bounds)
        a_mon, _ = quotient(self.p_monoid, k_a)
        b_mon, _ = quotient(self.q_monoid, k_b)
        depth = min(self.bounds.search_bound, 4)
        words = word_ball(self.p_monoid.num_generators, depth)
        seen = {}
        for w in words:
            key = b_mon.normal_form(self.j.apply(w))
            cls = a_mon.normal_form(w)
            if key in seen and seen[key] != cls:
                raise ValidationError(
                    "the induced map from the chart quotient into the extended "
                    "quotient is not injective; the root algebra would not be "
                    "faithful over its base",
                    locus={"words": (seen[key], cls)},
                )
            seen.setdefault(key, cls)
        self.kernel_p = k_a
        self.kernel_q = k_b

    # -- presentation data (used by the deterministic dump)

    def t_names(self):
        return tuple(f"t_{n}" for n in self.p_monoid.names)

    def x_names(self):
        return tuple(f"x_{n}" for n in self.q_monoid.names)

    def t_degree(self, i: int) -> tuple:
        """Degree of t_{p_i}: the i-th column of the j matrix."""
        jmat = self.j.matrix()
        return tuple(jmat[r][i] for r in range(self.q_monoid.num_generators))

    def x_degree(self, g: int) -> tuple:
        return tuple(1 if i == g else 0 for i in range(self.q_monoid.num_generators))

    def defining_relations(self):
        """(x-word, value, t-word) triples: x^{j(p)} = f(p) t^{p} per P-generator."""
        out = []
        for i in range(self.p_monoid.num_generators):
            p = self.p_monoid.generator(i)
            out.append((self.j.apply(p), self.chart.value(p), p))
        return out

    # -- the simplicial monomial calculus

    def _require_simplicial(self):
        if not self.simplicial:
            raise UnsupportedOperationError(
                "operation implemented only for simplicial root algebras"
            )

    def canonical_monomial(self, w) -> tuple:
        """(t_exponents, x_exponents) of the canonical basis vector of B_w."""
        self._require_simplicial()
        rep, shift = self.denominators.fold(tuple(w))
        return shift, rep

    def chase(self, coef: RingElement, tvec, qvec, w):
        """Multiply the canonical basis vector of B_w by coef * t^tvec x^qvec.

        Returns (scalar, new_degree) with the product equal to
        scalar * e_{new_degree}.
        """
        self._require_simplicial()
        w = tuple(w)
        rep, shift = self.denominators.fold(w)
        scalar = coef
        new_x = [r + q for r, q in zip(rep, qvec)]
        for i, d in enumerate(self.degrees):
            k = new_x[i] // d
            if k:
                scalar = scalar * self.values[i] ** k
        term_degree = tuple(d * t + q for d, t, q in zip(self.degrees, tvec, qvec))
        return scalar, tuple(a + b for a, b in zip(w, term_degree))

    def structure_constant(self, w, g: int) -> RingElement:
        """The scalar c with x_g * e_w = c * e_{w + deg x_g}."""
        self._require_simplicial()
        key = (tuple(w), g)
        if key not in self._constants:
            coef, _ = self.chase(self.ring.one(), (0,) * len(self.degrees), self.x_degree(g), w)
            self._constants[key] = coef
        return self._constants[key]

    def graded_piece(self, w, *, bounds: Bounds | None = None) -> GradedPiece:
        w = tuple(w)
        if self.simplicial:
            rep, shift = self.denominators.fold(w)
            return GradedPiece(
                degree=w,
                generators=((shift, rep),),
                relations=Matrix.zero(self.ring, 0, 1),
                rank_hint=1,
                complete=True,
            )
        return self._general_piece(w, bounds or self.bounds)

    # -- bounded general pieces

    def _general_piece(self, w, bounds: Bounds) -> GradedPiece:
        tgt = self.q_monoid
        quotient_group = self.denominators.quotient
        target_class = quotient_group.canonical_form(list(w))
        classes = []
        for word in word_ball(tgt.num_generators, bounds.piece_height):
            if quotient_group.canonical_form(list(word)) != target_class:
                continue
            nf = tgt.normal_form(word)
            if nf not in classes:
                classes.append(nf)
        classes.sort(key=grlex_key)
        if not classes:
            return GradedPiece(w, (), Matrix.zero(self.ring, 0, 0), 0, complete=False)
        index = {c: i for i, c in enumerate(classes)}
        # one-step divisibility equations e_c = f(p) e_{c'} for c ~ c' + j(p)
        equations = []  # (c_index, cprime_index, value)
        for c in classes:
            for i in range(self.p_monoid.num_generators):
                step = self.j.apply(self.p_monoid.generator(i))
                for cp in classes:
                    if tgt.normal_form(word_add(cp, step)) == c:
                        equations.append((index[c], index[cp], self.chart.value(self.p_monoid.generator(i))))
        # eliminate every class that appears on the left of an equation,
        # keeping minimal classes as generators
        reducible = sorted({c for c, _, _ in equations}, reverse=True)
        minimal = [i for i in range(len(classes)) if i not in set(reducible)]
        # express each class in the minimal generators by walking equations
        expressions: dict[int, dict[int, RingElement]] = {}

        def express(i, depth=0):
            if i in expressions:
                return expressions[i]
            if depth > len(classes) + 2:
                raise ResourceError("divisibility elimination did not terminate")
            for c, cp, val in equations:
                if c == i:
                    sub = express(cp, depth + 1)
                    expressions[i] = {k: val * v for k, v in sub.items()}
                    return expressions[i]
            expressions[i] = {i: self.ring.one()}
            return expressions[i]

        rows = []
        for c, cp, val in equations:
            lhs = express(c)
            rhs = {k: val * v for k, v in express(cp).items()}
            row = []
            for m in minimal:
                row.append(lhs.get(m, self.ring.zero()) - rhs.get(m, self.ring.zero()))
            if any(not e.is_zero for e in row):
                rows.append(row)
        relations = (
            Matrix.from_rows(self.ring, rows)
            if rows
            else Matrix.zero(self.ring, 0, len(minimal))
        )
        gens = []
        for m in minimal:
            gens.append((None, classes[m]))
        return GradedPiece(w, tuple(gens), relations, len(minimal), complete=False)

    def piece_multiplication_matrix(self, w, g: int, *, bounds: Bounds | None = None) -> Matrix:
        """Matrix of x_g : B_w -> B_{w + deg x_g} between piece presentations."""
        if self.simplicial:
            return Matrix.from_rows(self.ring, [[self.structure_constant(w, g)]])
        bounds = bounds or self.bounds
        src = self._general_piece(tuple(w), bounds)
        target_degree = tuple(a + b for a, b in zip(w, self.x_degree(g)))
        tgt_piece = self._general_piece(target_degree, bounds)
        tgt = self.q_monoid
        t_index = {c: i for i, (_, c) in enumerate(tgt_piece.generators)}
        cols = []
        for _, c in src.generators:
            moved = tgt.normal_form(word_add(c, tgt.generator(g)))
            col = [self.ring.zero()] * len(tgt_piece.generators)
            if moved in t_index:
                col[t_index[moved]] = self.ring.one()
            else:
                raise ResourceError(
                    "image class missing from the bounded piece presentation"
                )
            cols.append(col)
        rows = [[cols[j][i] for j in range(len(cols))] for i in range(len(tgt_piece.generators))]
        return Matrix.from_rows(self.ring, rows) if rows else Matrix.zero(self.ring, 0, len(cols))

    def __repr__(self):
        return (
            f"GradedRootAlgebra({self.ring.kind}, index={self.denominators.index}, "
            f"simplicial={self.simplicial})"
        )


def build_root_algebra(chart: KatoChart, denominators: DenominatorSystem, *, bounds: Bounds | None = None) -> GradedRootAlgebra:
    return GradedRootAlgebra(chart, denominators, bounds=bounds)


@dataclass
class StackClassification:
    finite: bool
    tame: bool
    dm: bool
    index: int
    characteristic: int


def classify_stack(algebra: GradedRootAlgebra, characteristic: int | None = None) -> StackClassification:
    """Finite and tame always; Deligne-Mumford iff the index is prime to char."""
    char = algebra.ring.characteristic if characteristic is None else characteristic
    n = algebra.denominators.index
    dm = char == 0 or gcd(n, char) == 1
    return StackClassification(finite=True, tame=True, dm=dm, index=n, characteristic=char)
