"""Deterministic random instance generators.

Used by the self-test command and by the test suite.  Parabolic sheaves are
assembled directly from per-direction "line" data (invertible scalar chains
when the chart value is nonzero, supported intervals when it is zero), so
that validity holds by construction without going through the functors under
test.
"""

from __future__ import annotations

import random

from .chart import make_chart
from .fields import GF
from .kummer import make_denominator_system
from .linalg import Matrix
from .monoid import FpMonoid, MonoidHom
from .parabolic import ParabolicSheaf, RModule, direct_sum
from .poly import BaseRing
from .rootalg import GradedRootAlgebra, build_root_algebra
from .equivalence import GradedPresentation, free_presentation


def random_presentation(rng: random.Random, max_gens: int = 3, max_rels: int = 3, max_entry: int = 2) -> FpMonoid:
    n = rng.randint(1, max_gens)
    rels = []
    for _ in range(rng.randint(0, max_rels)):
        u = tuple(rng.randint(0, max_entry) for _ in range(n))
        v = tuple(rng.randint(0, max_entry) for _ in range(n))
        rels.append((u, v))
    return FpMonoid(n, rels)


def random_simplicial_algebra(
    rng: random.Random,
    field,
    max_rank: int = 2,
    max_degree: int = 4,
    allow_zero_values: bool = True,
) -> GradedRootAlgebra:
    r = rng.randint(1, max_rank)
    degrees = [rng.randint(1, max_degree) for _ in range(r)]
    p = FpMonoid.free(r, tuple(f"p{i}" for i in range(r)))
    q = FpMonoid.free(r, tuple(f"q{i}" for i in range(r)))
    jmat = [tuple(degrees[i] if k == i else 0 for k in range(r)) for i in range(r)]
    j = MonoidHom(p, q, jmat)
    ring = BaseRing(field)
    values = []
    for _ in range(r):
        pool = [c for c in field.elements()]
        if not allow_zero_values:
            pool = [c for c in pool if not field.is_zero(c)]
        values.append(ring.constant(rng.choice(pool)))
    return build_root_algebra(make_chart(p, ring, values), make_denominator_system(j))


def _line_data(rng: random.Random, field, d: int, value):
    """Per-slot dims and step scalars for one direction of a line sheaf."""
    if not field.is_zero(value):
        scalars = []
        for _ in range(d - 1):
            scalars.append(rng.choice([c for c in field.elements() if not field.is_zero(c)]))
        prod = field.one
        for c in scalars:
            prod = field.mul(prod, c)
        scalars.append(field.mul(value, field.inv(prod)))
        return [1] * d, scalars
    # zero chart value: a supported interval, with the exit map zero
    length = rng.randint(0, d)
    start = rng.randint(0, d - 1)
    dims = [0] * d
    for k in range(length):
        dims[(start + k) % d] = 1
    scalars = []
    for v in range(d):
        nxt = (v + 1) % d
        inside = dims[v] and dims[nxt]
        is_exit = (v - start) % d == length - 1 if length else False
        if inside and not (length == d and is_exit):
            scalars.append(rng.choice([c for c in field.elements() if not field.is_zero(c)]))
        else:
            scalars.append(field.zero)
    return dims, scalars


def line_sheaf(rng: random.Random, algebra: GradedRootAlgebra) -> ParabolicSheaf:
    """A parabolic sheaf with slot dimensions 0 or 1, valid by construction."""
    field = algebra.ring.field
    per_direction = [
        _line_data(rng, field, d, v.constant_value() if not v.is_zero else field.zero)
        for d, v in zip(algebra.degrees, algebra.values)
    ]
    domain = algebra.denominators.fundamental_domain
    ring = algebra.ring
    slots = {}
    maps = {}
    for rep in domain:
        dim = 1
        for i, (dims, _) in enumerate(per_direction):
            dim *= dims[rep[i]]
        slots[rep] = RModule(ring, dim)
    for rep in domain:
        for g in range(len(algebra.degrees)):
            nxt = tuple(
                (rep[i] + (1 if i == g else 0)) % algebra.degrees[i] for i in range(len(rep))
            )
            rows, cols = slots[nxt].rank, slots[rep].rank
            if rows and cols:
                scalar = per_direction[g][1][rep[g]]
                for i, (dims, _) in enumerate(per_direction):
                    if i != g and not dims[rep[i]]:
                        scalar = field.zero
                maps[(rep, g)] = Matrix.from_rows(ring, [[ring.constant(scalar)]])
            else:
                maps[(rep, g)] = Matrix.zero(ring, rows, cols)
    return ParabolicSheaf(algebra, slots, maps, validate=True)


def random_parabolic_sheaf(
    rng: random.Random,
    algebra: GradedRootAlgebra,
    max_components: int = 3,
) -> ParabolicSheaf:
    parts = [line_sheaf(rng, algebra) for _ in range(rng.randint(1, max_components))]
    out = parts[0]
    for p in parts[1:]:
        out = direct_sum(out, p)
    return out


def random_graded_presentation(
    rng: random.Random,
    algebra: GradedRootAlgebra,
    max_gens: int = 2,
    max_rels: int = 2,
) -> GradedPresentation:
    r = len(algebra.degrees)
    ngens = rng.randint(1, max_gens)
    degrees = [
        tuple(rng.randint(-2 * algebra.degrees[i], 2 * algebra.degrees[i]) for i in range(r))
        for _ in range(ngens)
    ]
    n = free_presentation(algebra, degrees)
    rows = []
    field = algebra.ring.field
    for _ in range(rng.randint(0, max_rels)):
        extra = tuple(rng.randint(0, algebra.degrees[i]) for i in range(r))
        delta = tuple(max(d[i] for d in degrees) + extra[i] for i in range(r))
        entries = []
        nonzero = False
        for a in range(ngens):
            coef = rng.choice(list(field.elements()))
            if field.is_zero(coef):
                entries.append(())
                continue
            gap = tuple(delta[i] - degrees[a][i] for i in range(r))
            q = tuple(gap[i] % algebra.degrees[i] for i in range(r))
            t = tuple((gap[i] - q[i]) // algebra.degrees[i] for i in range(r))
            entries.append(((algebra.ring.constant(coef), t, q),))
            nonzero = True
        if nonzero:
            rows.append(entries)
    return GradedPresentation(algebra, degrees, rows)


def random_chart_and_denominators(rng: random.Random, p: int = 7, max_rank: int = 3, max_degree: int = 4):
    """A random chart over GF(p) with simplicial denominators (zeros allowed)."""
    return random_simplicial_algebra(rng, GF(p), max_rank=max_rank, max_degree=max_degree)
