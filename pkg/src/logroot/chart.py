"""Kato charts: monoid homomorphisms into the multiplicative monoid of a ring.

A chart assigns an exact ring element to each monoid generator so that the
monoid relations become monomial identities.  Units of the ring (nonzero
constants) play the role of trivialised line-bundle sections; stalks at
rational points are computed from vanishing of the assigned values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import Bounds
from .errors import InputError, ResourceError, ValidationError
from .monoid import (
    FpMonoid,
    MonoidHom,
    SubmonoidGens,
    grlex_key,
    kernel_closure,
    quotient,
    word_add,
)
from .diophantine import minimal_inhomogeneous_solutions
from .poly import BaseRing, RingElement


@dataclass(frozen=True)
class RationalPoint:
    """An assignment of base-field constants to the ring variables."""

    assignments: tuple  # tuple of (variable, constant) pairs, sorted

    @classmethod
    def make(cls, ring: BaseRing, mapping: dict) -> "RationalPoint":
        missing = [v for v in ring.variables if v not in mapping]
        extra = [v for v in mapping if v not in ring.variables]
        if missing or extra:
            raise InputError(f"point must assign exactly {ring.variables}")
        items = tuple(sorted((v, ring.field(c)) for v, c in mapping.items()))
        return cls(items)

    def as_dict(self) -> dict:
        return dict(self.assignments)


class KatoChart:
    """A monoid homomorphism P -> (R, *) given on generators."""

    def __init__(self, monoid: FpMonoid, ring: BaseRing, values):
        if len(values) != monoid.num_generators:
            raise InputError("one ring value per generator is required")
        self.monoid = monoid
        self.ring = ring
        self.values = tuple(ring.element(v) for v in values)
        for u, v in monoid.relations:
            if self.value(u) != self.value(v):
                raise ValidationError(
                    "chart violates the relation "
                    f"{monoid.word_str(u)} = {monoid.word_str(v)}: "
                    f"{self.value(u)} != {self.value(v)}",
                    locus={"relation": (u, v)},
                )

    def value(self, word) -> RingElement:
        word = self.monoid.check_word(word)
        out = self.ring.one()
        for c, val in zip(word, self.values):
            if c:
                out = out * val**c
        return out

    def compose(self, f: MonoidHom) -> "KatoChart":
        """The chart obtained by precomposing with f: M' -> P."""
        if f.target != self.monoid:
            raise InputError("homomorphism does not land in the chart monoid")
        return KatoChart(f.source, self.ring, [self.value(img) for img in f.images])

    def __repr__(self):
        vals = ", ".join(f"{n} -> {v}" for n, v in zip(self.monoid.names, self.values))
        return f"KatoChart({vals} in {self.ring.kind})"


def make_chart(monoid: FpMonoid, ring: BaseRing, values) -> KatoChart:
    return KatoChart(monoid, ring, values)


def chart_kernel(chart: KatoChart, *, bounds: Bounds | None = None) -> SubmonoidGens:
    """Kernel of the chart as a symmetric monoidal functor.

    Generated by the generators whose value is a unit of R, closed up to a
    kernel (the closure is computed, though with unit values on generators it
    is already closed).
    """
    m = chart.monoid
    unit_gens = [m.generator(i) for i, v in enumerate(chart.values) if v.is_unit]
    return kernel_closure(m, SubmonoidGens(m, unit_gens), bounds=bounds or m.bounds)


@dataclass
class StalkData:
    kernel: SubmonoidGens
    stalk: FpMonoid
    projection: MonoidHom
    chart_is_minimal_at_point: bool


def stalk_df(chart: KatoChart, point: RationalPoint, *, bounds: Bounds | None = None) -> StalkData:
    """Stalk of the induced structure at a rational point.

    Units of the local ring at the point are exactly the sections that do not
    vanish there, so the stalk kernel is generated by the non-vanishing
    generators.
    """
    m = chart.monoid
    pt = point.as_dict()
    nonvanishing = [
        m.generator(i)
        for i, v in enumerate(chart.values)
        if not chart.ring.field.is_zero(v.evaluate(pt))
    ]
    k = kernel_closure(m, SubmonoidGens(m, nonvanishing), bounds=bounds or m.bounds)
    stalk, proj = quotient(m, k)
    return StalkData(k, stalk, proj, chart_is_minimal_at_point=k.is_trivial)


@dataclass
class DfQuotient:
    kernel: SubmonoidGens
    quotient: FpMonoid
    projection: MonoidHom
    section: dict  # quotient normal form -> representative word in P
    unit_discrepancies: dict  # generator name -> unit by which values differ


def df_quotient(chart: KatoChart, *, bounds: Bounds | None = None) -> DfQuotient:
    """The universal quotient by the chart kernel, with explicit unit data.

    The section embeds each quotient class back into P by its normal form;
    for every generator the recorded discrepancy is the unit by which the
    generator's value differs from its representative's value.
    """
    m = chart.monoid
    k = chart_kernel(chart, bounds=bounds)
    q, proj = quotient(m, k)
    section = {}
    for i in range(m.num_generators):
        nf = q.normal_form(q.generator(i))
        section.setdefault(nf, nf)  # a quotient normal form is itself a P-word
    section.setdefault(q.zero(), q.zero())
    discrepancies = {}
    for i, name in enumerate(m.names):
        rep = q.normal_form(q.generator(i))
        delta = chart.value(m.generator(i)).unit_quotient(chart.value(rep))
        if delta is None:
            raise ValidationError(
                f"representative of generator {name} differs by a non-unit",
                locus={"generator": name},
            )
        discrepancies[name] = delta
    return DfQuotient(k, q, proj, section, discrepancies)


@dataclass
class GradingPiece:
    degree: tuple
    classes: tuple  # normal forms of the congruence classes in this degree
    rank: int
    complete: bool


def algebra_grading(m: FpMonoid, u, *, bounds: Bounds | None = None) -> GradingPiece:
    """Basis of the degree-u piece of the monoid algebra Z[P].

    ``u`` is a vector in Z^n representing an element of P^gp; the piece is
    spanned by the congruence classes with that image.  Exact for integral
    monoids; otherwise a bounded enumeration flagged incomplete unless the
    class count is certified.
    """
    bounds = bounds or m.bounds
    u = tuple(u)
    if len(u) != m.num_generators:
        raise InputError("degree vector of wrong length")
    pg = m.presented_group()
    target = pg.canonical_form(list(u))
    if m.classify().integral:
        cols = pg.relation_columns
        k = len(cols)
        rows = []
        for i in range(m.num_generators):
            row = [1 if j == i else 0 for j in range(m.num_generators)]
            row += [col[i] for col in cols]
            row += [-col[i] for col in cols]
            rows.append(row)
        sols = minimal_inhomogeneous_solutions(rows, list(u), bounds=bounds)
        words = sorted({m.normal_form(s[: m.num_generators]) for s in sols}, key=grlex_key)
        # an integral monoid embeds in its group, so the piece has rank <= 1
        return GradingPiece(target, tuple(words), len(words), complete=True)
    found = []
    for w in m.ball(bounds.piece_height):
        if pg.canonical_form(list(w)) == target:
            nf = m.normal_form(w)
            if nf not in found:
                found.append(nf)
    return GradingPiece(target, tuple(sorted(found, key=grlex_key)), len(found), complete=False)
