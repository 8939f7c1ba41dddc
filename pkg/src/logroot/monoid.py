"""Finitely presented commutative monoids and their word problem.

A monoid is N^n modulo the congruence generated by finitely many pairs of
exponent vectors.  The word problem is decided by oriented vector rewriting:
each congruence pair is oriented under the graded-lexicographic order and the
system is completed by resolving critical pairs (the commutative analogue of
Knuth-Bendix / Buchberger).  Completion of a commutative presentation always
terminates, but can be expensive, so a rule budget applies.

Normal forms are the order-minimal representatives: two words are congruent
iff their normal forms coincide.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product

from .bounds import DEFAULT_BOUNDS, Bounds
from .diophantine import minimal_inhomogeneous_solutions, minimal_solutions
from .errors import InputError, ResourceError, ValidationError
from .lattice import FgAbelianGroup, PresentedGroup

Word = tuple  # tuple[int, ...], one exponent per generator

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


# ---------------------------------------------------------------------------
# word helpers


def word_add(u: Word, v: Word) -> Word:
    return tuple(a + b for a, b in zip(u, v))


def word_sub(u: Word, v: Word) -> Word:
    return tuple(a - b for a, b in zip(u, v))


def word_leq(u: Word, v: Word) -> bool:
    """Componentwise u <= v, i.e. u divides v."""
    return all(a <= b for a, b in zip(u, v))


def word_scale(k: int, u: Word) -> Word:
    return tuple(k * a for a in u)


def grlex_key(w: Word):
    return (sum(w), w)


def zero_word(n: int) -> Word:
    return (0,) * n


def word_ball(num_generators: int, max_degree: int):
    """All words of total degree <= max_degree, in graded-lex order."""
    words = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            words.append(tuple(prefix))
            return
        for c in range(remaining, -1, -1):
            rec(prefix + [c], remaining - c, slots - 1)

    for deg in range(max_degree + 1):
        rec([], deg, num_generators)
    # drop duplicates produced per degree when the leftover degree is unused
    out = []
    seen = set()
    for w in words:
        if sum(w) <= max_degree and w not in seen:
            seen.add(w)
            out.append(w)
    return sorted(out, key=grlex_key)


# ---------------------------------------------------------------------------
# completion


def _orient(u: Word, v: Word):
    return (u, v) if grlex_key(u) > grlex_key(v) else (v, u)


def _reduce(w: Word, rules) -> Word:
    changed = True
    while changed:
        changed = False
        for lhs, rhs in rules:
            if word_leq(lhs, w):
                w = word_add(word_sub(w, lhs), rhs)
                changed = True
    return w


def complete(relations, num_generators: int, *, bounds: Bounds = DEFAULT_BOUNDS):
    """Complete a set of congruence pairs into a confluent rewriting system."""
    rules: list[tuple[Word, Word]] = []
    pending = deque()
    for u, v in relations:
        pending.append((tuple(u), tuple(v)))
    added = 0
    while pending:
        u, v = pending.popleft()
        u = _reduce(u, rules)
        v = _reduce(v, rules)
        if u == v:
            continue
        lhs, rhs = _orient(u, v)
        added += 1
        if added > bounds.rule_budget:
            raise ResourceError(
                f"completion exceeded the rule budget ({bounds.rule_budget}); "
                f"{len(rules)} confirmed rules, {len(pending)} pending pairs",
                partial=rules,
            )
        survivors = []
        for old in rules:
            if word_leq(lhs, old[0]):
                pending.append(old)
            else:
                survivors.append(old)
        rules = survivors
        for l2, r2 in rules:
            # disjoint left-hand sides always join; skip those pairs
            if all(min(a, b) == 0 for a, b in zip(lhs, l2)):
                continue
            w = tuple(max(a, b) for a, b in zip(lhs, l2))
            pending.append((word_add(word_sub(w, lhs), rhs), word_add(word_sub(w, l2), r2)))
        rules.append((lhs, rhs))
    # normalise right-hand sides against the final system
    final = []
    for lhs, rhs in rules:
        final.append((lhs, _reduce(rhs, [r for r in rules if r[0] != lhs])))
    return sorted(final, key=lambda rule: grlex_key(rule[0]))


# ---------------------------------------------------------------------------
# the monoid itself


class FpMonoid:
    """N^num_generators modulo the congruence generated by ``relations``."""

    def __init__(self, num_generators, relations=(), names=None, *, bounds: Bounds = DEFAULT_BOUNDS):
        if num_generators < 0:
            raise InputError("negative generator count")
        rels = []
        for u, v in relations:
            u, v = tuple(u), tuple(v)
            if len(u) != num_generators or len(v) != num_generators:
                raise InputError("relation vector of wrong length")
            if any(c < 0 for c in u + v):
                raise InputError("relation entries must be non-negative")
            rels.append((u, v))
        self.num_generators = num_generators
        self.relations = tuple(rels)
        if names is None:
            if num_generators <= len(_LETTERS):
                names = tuple(_LETTERS[:num_generators])
            else:
                names = tuple(f"g{i}" for i in range(num_generators))
        if len(names) != num_generators or len(set(names)) != num_generators:
            raise InputError("generator names must be distinct and match the count")
        self.names = tuple(names)
        self.bounds = bounds
        self.rewrite_rules = tuple(complete(rels, num_generators, bounds=bounds))
        self._group: PresentedGroup | None = None
        self._classification = None

    # -- constructors

    @classmethod
    def free(cls, n: int, names=None, **kw) -> "FpMonoid":
        return cls(n, (), names, **kw)

    # -- basics

    def __repr__(self):
        rels = ", ".join(
            f"{self.word_str(u)} = {self.word_str(v)}" for u, v in self.relations
        )
        return f"FpMonoid(<{' '.join(self.names)}{' | ' + rels if rels else ''}>)"

    def __eq__(self, other):
        return (
            isinstance(other, FpMonoid)
            and other.num_generators == self.num_generators
            and other.relations == self.relations
            and other.names == self.names
        )

    def __hash__(self):
        return hash((self.num_generators, self.relations, self.names))

    def generator(self, i: int) -> Word:
        return tuple(1 if j == i else 0 for j in range(self.num_generators))

    def generators(self):
        return [self.generator(i) for i in range(self.num_generators)]

    def zero(self) -> Word:
        return zero_word(self.num_generators)

    def check_word(self, w) -> Word:
        w = tuple(w)
        if len(w) != self.num_generators:
            raise InputError(
                f"word of length {len(w)} in a monoid with {self.num_generators} generators"
            )
        if any(c < 0 for c in w):
            raise InputError("word entries must be non-negative")
        return w

    def word_str(self, w: Word) -> str:
        parts = []
        for name, c in zip(self.names, w):
            if c == 1:
                parts.append(name)
            elif c > 1:
                parts.append(f"{c} {name}")
        return " + ".join(parts) if parts else "0"

    def parse_word(self, text: str) -> Word:
        """Inverse of word_str, accepting '2 a + b', '2*a+b', or '0'."""
        text = text.strip()
        w = [0] * self.num_generators
        if text == "0":
            return tuple(w)
        for chunk in text.split("+"):
            chunk = chunk.replace("*", " ").strip()
            if not chunk:
                raise InputError("empty word term")
            pieces = chunk.split()
            if len(pieces) == 1:
                coef, name = 1, pieces[0]
            elif len(pieces) == 2:
                coef, name = int(pieces[0]), pieces[1]
            else:
                raise InputError(f"cannot parse word term {chunk!r}")
            if name not in self.names:
                raise InputError(f"unknown generator {name!r}")
            w[self.names.index(name)] += coef
        return tuple(w)

    # -- the word problem

    def normal_form(self, w) -> Word:
        return _reduce(self.check_word(w), self.rewrite_rules)

    def congruent(self, u, v) -> bool:
        return self.normal_form(u) == self.normal_form(v)

    def is_zero(self, w) -> bool:
        return self.normal_form(w) == self.zero()

    # -- groupification

    def presented_group(self) -> PresentedGroup:
        """A^gp as Z^n modulo the lattice of relation differences."""
        if self._group is None:
            cols = [list(word_sub(u, v)) for u, v in self.relations]
            self._group = PresentedGroup(self.num_generators, cols)
        return self._group

    def iota(self, w) -> tuple:
        """Canonical coordinates of a word's image in A^gp."""
        return self.presented_group().canonical_form(list(self.check_word(w)))

    # -- classification

    def classify(self) -> "Classification":
        if self._classification is None:
            self._classification = _classify(self)
        return self._classification

    # -- enumeration helpers

    def ball(self, max_degree: int):
        return word_ball(self.num_generators, max_degree)

    def class_of_zero(self, *, max_size: int = 4096):
        """The congruence class of 0, or None if it is not finite within budget.

        Computed by expanding 0 backwards along the completed rules.
        """
        zero = self.zero()
        expanders = [(l, r) for l, r in self.rewrite_rules]
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for w in frontier:
                for lhs, rhs in expanders:
                    if word_leq(rhs, w):
                        up = word_add(word_sub(w, rhs), lhs)
                        if up not in seen:
                            seen.add(up)
                            nxt.append(up)
                            if len(seen) > max_size:
                                return None
            frontier = nxt
        return seen


@dataclass
class Classification:
    integral: bool
    sharp: bool | None
    torsion_free: bool
    group: FgAbelianGroup
    iota_images: tuple
    non_integral_witness: tuple | None = None
    sharp_witness: Word | None = None


def _cancellative_closure_pairs(m: FpMonoid, bounds: Bounds):
    """Generators of {(u, v) in N^2n : u - v in relation lattice}."""
    n = m.num_generators
    cols = m.presented_group().relation_columns
    k = len(cols)
    rows = []
    for i in range(n):
        row = [0] * (2 * n + 2 * k)
        row[i] = 1
        row[n + i] = -1
        for j, col in enumerate(cols):
            row[2 * n + j] = -col[i]
            row[2 * n + k + j] = col[i]
        rows.append(row)
    sols = minimal_solutions(rows, 2 * n + 2 * k, bounds=bounds)
    pairs = []
    for s in sols:
        u, v = s[:n], s[n : 2 * n]
        if u != v:
            pairs.append((u, v))
    return pairs


def _classify(m: FpMonoid) -> Classification:
    n = m.num_generators
    bounds = m.bounds
    pg = m.presented_group()
    group = pg.fg_group()
    iota_images = tuple(pg.canonical_form(list(m.generator(i))) for i in range(n))

    integral = True
    witness = None
    for u, v in _cancellative_closure_pairs(m, bounds):
        if m.normal_form(u) != m.normal_form(v):
            integral = False
            witness = (u, v)
            break

    sharp, sharp_witness = _decide_sharp(m, integral, bounds)
    torsion_free = bool(integral and group.is_torsion_free)
    return Classification(integral, sharp, torsion_free, group, iota_images, witness, sharp_witness)


def _lattice_orthant_minimals(m: FpMonoid, bounds: Bounds):
    """Minimal nonzero words lying in the relation lattice."""
    n = m.num_generators
    cols = m.presented_group().relation_columns
    k = len(cols)
    if k == 0:
        return []
    rows = []
    for i in range(n):
        row = [0] * (n + 2 * k)
        row[i] = 1
        for j, col in enumerate(cols):
            row[n + j] = -col[i]
            row[n + k + j] = col[i]
        rows.append(row)
    sols = minimal_solutions(rows, n + 2 * k, bounds=bounds)
    out = []
    for s in sols:
        w = s[:n]
        if any(w):
            out.append(w)
    return sorted(set(out), key=grlex_key)


def _decide_sharp(m: FpMonoid, integral: bool, bounds: Bounds):
    pg = m.presented_group()
    if integral:
        for h in _lattice_orthant_minimals(m, bounds):
            for i, c in enumerate(h):
                if c > 0 and not pg.contains(list(m.generator(i))):
                    return False, h
        return True, None
    # Non-integral: a word is a unit precisely when it divides something
    # congruent to 0, so expand the class of 0.
    if not any(rhs == m.zero() for _, rhs in m.rewrite_rules):
        return True, None  # the class of 0 is {0}
    zero_class = m.class_of_zero()
    null_gen = [m.is_zero(m.generator(i)) for i in range(m.num_generators)]
    if zero_class is not None:
        for w in zero_class:
            for i, c in enumerate(w):
                if c > 0 and not null_gen[i]:
                    return False, w
        return True, None
    # unbounded class: scan a ball for a witness, else give up
    for w in m.ball(bounds.search_bound):
        if m.is_zero(w):
            for i, c in enumerate(w):
                if c > 0 and not null_gen[i]:
                    return False, w
    return None, None


# ---------------------------------------------------------------------------
# homomorphisms


class MonoidHom:
    """A homomorphism given by one target word per source generator."""

    def __init__(self, source: FpMonoid, target: FpMonoid, images, *, check: bool = True):
        if len(images) != source.num_generators:
            raise InputError("one image word per source generator is required")
        self.source = source
        self.target = target
        self.images = tuple(target.check_word(w) for w in images)
        if check:
            bad = self.violated_relation()
            if bad is not None:
                u, v = bad
                raise ValidationError(
                    "images do not respect the relation "
                    f"{source.word_str(u)} = {source.word_str(v)}",
                    locus={"relation": (u, v)},
                )

    def violated_relation(self):
        for u, v in self.source.relations:
            if self.target.normal_form(self.apply(u)) != self.target.normal_form(self.apply(v)):
                return (u, v)
        return None

    def apply(self, w) -> Word:
        w = self.source.check_word(w)
        out = self.target.zero()
        for c, img in zip(w, self.images):
            if c:
                out = word_add(out, word_scale(c, img))
        return out

    def matrix(self):
        """Integer matrix (target gens x source gens) of the image words."""
        return [
            [self.images[j][i] for j in range(self.source.num_generators)]
            for i in range(self.target.num_generators)
        ]

    def compose(self, inner: "MonoidHom") -> "MonoidHom":
        if inner.target != self.source:
            raise InputError("composition mismatch")
        return MonoidHom(inner.source, self.target, [self.apply(w) for w in inner.images], check=False)

    @classmethod
    def identity(cls, m: FpMonoid) -> "MonoidHom":
        return cls(m, m, m.generators(), check=False)

    def __repr__(self):
        arrows = ", ".join(
            f"{name} -> {self.target.word_str(img)}"
            for name, img in zip(self.source.names, self.images)
        )
        return f"MonoidHom({arrows})"


@dataclass
class SubmonoidGens:
    """A submonoid of ``ambient`` given by a finite generating list."""

    ambient: FpMonoid
    generators: tuple
    exact: bool = True
    bound_used: int | None = None

    def __init__(self, ambient, generators, exact=True, bound_used=None):
        self.ambient = ambient
        seen = []
        for g in generators:
            nf = ambient.normal_form(g)
            if nf != ambient.zero() and nf not in seen:
                seen.append(nf)
        self.generators = tuple(sorted(seen, key=grlex_key))
        self.exact = exact
        self.bound_used = bound_used

    @property
    def is_trivial(self) -> bool:
        return not self.generators

    def matrix(self):
        """Columns = generators, as an n x g integer matrix."""
        n = self.ambient.num_generators
        return [[g[i] for g in self.generators] for i in range(n)]

    def contains(self, w, *, bounds: Bounds | None = None) -> bool | None:
        """Membership test; None when the bounded search is inconclusive."""
        return submonoid_contains(self.ambient, self.generators, w, bounds=bounds or self.ambient.bounds)

    def __repr__(self):
        gens = ", ".join(self.ambient.word_str(g) for g in self.generators) or "0"
        return f"SubmonoidGens<{gens}>"


def submonoid_contains(m: FpMonoid, gens, w, *, bounds: Bounds = DEFAULT_BOUNDS) -> bool | None:
    """Does w lie in the submonoid of m generated by ``gens``?

    Exact for integral monoids (lattice membership plus congruence checks);
    otherwise a bounded search returning None when inconclusive.
    """
    w = m.normal_form(w)
    gens = [m.normal_form(g) for g in gens]
    if w == m.zero():
        return True
    if not gens:
        return False
    n = m.num_generators
    if m.classify().integral:
        cols = m.presented_group().relation_columns
        k = len(cols)
        rows = []
        for i in range(n):
            row = [g[i] for g in gens]
            row += [col[i] for col in cols]
            row += [-col[i] for col in cols]
            rows.append(row)
        sols = minimal_inhomogeneous_solutions(rows, list(w), bounds=bounds)
        return bool(sols)
    # bounded: breadth-first over sums of generators
    frontier = {m.zero()}
    seen = set(frontier)
    cap = sum(w) + bounds.search_bound
    while frontier:
        nxt = set()
        for s in frontier:
            for g in gens:
                t = m.normal_form(word_add(s, g))
                if t == w:
                    return True
                if sum(t) <= cap and t not in seen:
                    seen.add(t)
                    nxt.add(t)
        frontier = nxt
    return None


# ---------------------------------------------------------------------------
# kernels, closures, quotients


def kernel(f: MonoidHom, *, bounds: Bounds | None = None) -> SubmonoidGens:
    """Generators of f^{-1}(0).

    Exact when the target is integral; otherwise a bounded enumeration whose
    degree bound is recorded on the result.
    """
    bounds = bounds or f.source.bounds
    src, tgt = f.source, f.target
    n = src.num_generators
    fmat = f.matrix()
    if tgt.classify().integral:
        cols = tgt.presented_group().relation_columns
        k = len(cols)
        rows = []
        for i in range(tgt.num_generators):
            row = [fmat[i][j] for j in range(n)]
            row += [-col[i] for col in cols]
            row += [col[i] for col in cols]
            rows.append(row)
        if not rows:  # target is the zero monoid: everything is in the kernel
            return SubmonoidGens(src, src.generators())
        sols = minimal_solutions(rows, n + 2 * k, bounds=bounds)
        gens = sorted({s[:n] for s in sols if any(s[:n])}, key=grlex_key)
        gens = _minimize_generators(src, gens, bounds)
        return SubmonoidGens(src, gens)
    found = []
    for w in src.ball(bounds.search_bound):
        if w == src.zero():
            continue
        if tgt.is_zero(f.apply(w)):
            if not any(word_leq(g, w) for g in found):
                found.append(w)
    return SubmonoidGens(src, found, exact=False, bound_used=bounds.search_bound)


def _minimize_generators(m: FpMonoid, gens, bounds: Bounds):
    kept = []
    for g in sorted(gens, key=grlex_key):
        others = [h for h in gens if h != g]
        if submonoid_contains(m, others, g, bounds=bounds) is True:
            gens = others
        else:
            kept.append(g)
    return kept


def kernel_closure(m: FpMonoid, s: SubmonoidGens, *, bounds: Bounds | None = None) -> SubmonoidGens:
    """The smallest kernel containing s: {a : a + s ~ s' for s, s' in <S>}.

    The defining formula is closed already, so one saturation round suffices;
    it is computed exactly in the integral case and by a bounded search
    otherwise.
    """
    bounds = bounds or m.bounds
    if s.ambient != m:
        raise InputError("submonoid does not live in the given monoid")
    n = m.num_generators
    gens = list(s.generators)
    if not gens:
        return SubmonoidGens(m, [])
    g = len(gens)
    if m.classify().integral:
        cols = m.presented_group().relation_columns
        k = len(cols)
        rows = []
        for i in range(n):
            row = [0] * (n + 2 * g + 2 * k)
            row[i] = 1
            for j, gen in enumerate(gens):
                row[n + j] = gen[i]
                row[n + g + j] = -gen[i]
            for j, col in enumerate(cols):
                row[n + 2 * g + j] = -col[i]
                row[n + 2 * g + k + j] = col[i]
            rows.append(row)
        sols = minimal_solutions(rows, n + 2 * g + 2 * k, bounds=bounds)
        out = sorted({s_[:n] for s_ in sols if any(s_[:n])}, key=grlex_key)
        out = _minimize_generators(m, list(set(out) | set(gens)), bounds)
        return SubmonoidGens(m, out)
    # bounded: a + s ~ s' with s, s' drawn from a ball of generator sums
    span = set()
    frontier = {m.zero()}
    while frontier:
        nxt = set()
        for x in frontier:
            for gen in gens:
                y = m.normal_form(word_add(x, gen))
                if sum(y) <= 2 * bounds.search_bound and y not in span:
                    span.add(y)
                    nxt.add(y)
        frontier = nxt
    span.add(m.zero())
    span_nf = set(span)
    found = list(gens)
    for a in m.ball(bounds.search_bound):
        if a == m.zero():
            continue
        if any(m.normal_form(word_add(a, sof)) in span_nf for sof in span):
            if not any(word_leq(gn, a) for gn in found):
                found.append(a)
    return SubmonoidGens(m, found, exact=False, bound_used=bounds.search_bound)


def quotient(m: FpMonoid, s: SubmonoidGens):
    """The cokernel A/S of the inclusion, with the projection homomorphism."""
    if s.ambient != m:
        raise InputError("submonoid does not live in the given monoid")
    rels = list(m.relations) + [(g, m.zero()) for g in s.generators]
    q = FpMonoid(m.num_generators, rels, m.names, bounds=m.bounds)
    proj = MonoidHom(m, q, m.generators(), check=False)
    return q, proj


def hom_cokernel(f: MonoidHom):
    """Cokernel of an arbitrary homomorphism: target / image submonoid."""
    image = SubmonoidGens(f.target, list(f.images))
    return quotient(f.target, image)


@dataclass
class CokernelAnalysis:
    verdict: str  # "true" | "false" | "unknown"
    kernel: SubmonoidGens
    cokernel: FpMonoid
    projection: MonoidHom
    induced: MonoidHom
    inverse: MonoidHom | None
    free_cover: MonoidHom | None
    reason: str

    @property
    def is_cokernel(self) -> bool:
        return self.verdict == "true"


def _preimage_word(f: MonoidHom, target_word, bounds: Bounds):
    """Some source word mapping to the class of target_word, None, or 'unknown'."""
    tgt = f.target
    n = f.source.num_generators
    fmat = f.matrix()
    if tgt.classify().integral:
        cols = tgt.presented_group().relation_columns
        k = len(cols)
        rows = []
        for i in range(tgt.num_generators):
            row = [fmat[i][j] for j in range(n)]
            row += [-col[i] for col in cols]
            row += [col[i] for col in cols]
            rows.append(row)
        sols = minimal_inhomogeneous_solutions(rows, list(target_word), bounds=bounds)
        if not sols:
            return None
        return min((s[:n] for s in sols), key=grlex_key)
    want = tgt.normal_form(target_word)
    for w in f.source.ball(bounds.search_bound):
        if tgt.normal_form(f.apply(w)) == want:
            return w
    return "unknown"


def cokernel_analyze(f: MonoidHom, *, bounds: Bounds | None = None) -> CokernelAnalysis:
    """Decide whether f is a cokernel, i.e. whether A/ker(f) -> B is an iso.

    The inverse is constructed on target generators by preimage search and
    validated on relations; inconclusive searches yield verdict "unknown",
    never "false".
    """
    bounds = bounds or f.source.bounds
    ker = kernel(f, bounds=bounds)
    coker, proj = quotient(f.source, ker)
    induced = MonoidHom(coker, f.target, f.images, check=False)
    free_cover = None

    def finish(verdict, inverse, reason):
        cover = None
        if verdict == "true":
            free = FpMonoid.free(len(ker.generators), tuple(f"k{i}" for i in range(len(ker.generators))), bounds=bounds)
            cover = MonoidHom(free, f.source, list(ker.generators), check=False)
        return CokernelAnalysis(verdict, ker, coker, proj, induced, inverse, cover, reason)

    if not ker.exact:
        return finish("unknown", None, "kernel computation was a bounded search")

    # fast path: compare groupifications
    if coker.presented_group().fg_group() != f.target.presented_group().fg_group():
        return finish("false", None, "groupifications differ")

    preimages = []
    for i in range(f.target.num_generators):
        p = _preimage_word(f, f.target.generator(i), bounds)
        if p == "unknown":
            return finish("unknown", None, f"no preimage of generator {f.target.names[i]} found within bound")
        if p is None:
            return finish("false", None, f"generator {f.target.names[i]} is not in the image")
        preimages.append(p)

    inverse = MonoidHom(f.target, coker, preimages, check=False)
    bad = inverse.violated_relation()
    if bad is not None:
        return finish("false", None, "induced map is not injective (inverse candidate fails a relation)")
    for i in range(f.source.num_generators):
        back = inverse.apply(f.apply(f.source.generator(i)))
        if coker.normal_form(back) != coker.normal_form(coker.generator(i)):
            return finish("false", None, "induced map is not injective (generator does not return to itself)")
    for i in range(f.target.num_generators):
        out = f.target.normal_form(induced.apply(inverse.images[i]))
        if out != f.target.normal_form(f.target.generator(i)):
            return finish("false", None, "inverse candidate is not a section")
    return finish("true", inverse, "explicit mutually inverse homomorphisms found")
