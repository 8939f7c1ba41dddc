"""Kummer homomorphisms, denominator indices, and fundamental domains.

A homomorphism j: P -> Q is Kummer when it is injective and every element of
Q has a positive multiple inside j(P).  For integral P and Q both conditions
are decided exactly: injectivity through the relation lattices, the
multiplier condition through exact rational cone membership.  The induced
group map is then injective with finite cokernel, whose coset structure
yields the fundamental domain used everywhere downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .bounds import DEFAULT_BOUNDS, Bounds
from .diophantine import minimal_inhomogeneous_solutions, minimal_solutions
from .errors import InputError, ResourceError, ValidationError
from .intlinalg import SmithNormalForm, mat_vec
from .lattice import FgAbelianGroup, LatticeMap, PresentedGroup
from .monoid import (
    FpMonoid,
    MonoidHom,
    SubmonoidGens,
    grlex_key,
    word_ball,
    word_scale,
)
from .rationalcone import feasible_point, project_generated_cone


@dataclass
class KummerCheck:
    verdict: str  # "true" | "false" | "unknown"
    injective: bool | None
    witnesses: dict | None  # Q-generator name -> (m, preimage word in P)
    reason: str

    @property
    def holds(self) -> bool:
        return self.verdict == "true"


def _gp_kernel_basis(j: MonoidHom):
    """Basis of {d in Z^nP : J d lies in the relation lattice of Q}."""
    jmat = j.matrix()
    q_cols = j.target.presented_group().relation_columns
    n_p = j.source.num_generators
    n_q = j.target.num_generators
    cols = n_p + len(q_cols)
    mat = [[0] * cols for _ in range(n_q)]
    for i in range(n_q):
        for c in range(n_p):
            mat[i][c] = jmat[i][c]
        for c, col in enumerate(q_cols):
            mat[i][n_p + c] = col[i]
    if n_q == 0:
        # target is the zero monoid: everything maps to 0
        return [[1 if i == t else 0 for i in range(n_p)] for t in range(n_p)]
    snf = SmithNormalForm(mat)
    return [vec[:n_p] for vec in snf.kernel_basis()]


def _multiplier_witness(j: MonoidHom, gen_index: int, bounds: Bounds):
    """Smallest m > 0 with m*b in j(P) for the given Q-generator, with preimage."""
    tgt = j.target
    src = j.source
    n_p = src.num_generators
    q_cols = tgt.presented_group().relation_columns
    jmat = j.matrix()
    e = [1 if i == gen_index else 0 for i in range(tgt.num_generators)]
    # rational cone membership: e in cone(j columns) + span(L_Q)
    k = len(q_cols)
    rows = []
    for i in range(tgt.num_generators):
        rows.append([jmat[i][c] for c in range(n_p)] + [col[i] for col in q_cols])
    point = feasible_point(rows, e, nonneg=list(range(n_p)), nvars=n_p + k)
    if point is None:
        return None
    denom = 1
    for c in point:
        denom = denom * Fraction(c).denominator // gcd(denom, Fraction(c).denominator)
    m_cap = max(denom, 1)
    # smallest integer multiplier within the scaling cap
    solve_rows = []
    for i in range(tgt.num_generators):
        solve_rows.append(
            [jmat[i][c] for c in range(n_p)]
            + [-col[i] for col in q_cols]
            + [col[i] for col in q_cols]
        )
    for m in range(1, m_cap + 1):
        target = [m * c for c in e]
        sols = minimal_inhomogeneous_solutions(solve_rows, target, bounds=bounds)
        if sols:
            p = min((s[:n_p] for s in sols), key=grlex_key)
            return m, p
    raise ResourceError("rational witness had no integer refinement within the cap")


def is_kummer(j: MonoidHom, *, bounds: Bounds = DEFAULT_BOUNDS) -> KummerCheck:
    """Decide the Kummer property with certificates.

    Integral source and target give exact answers; otherwise the result is a
    bounded three-valued check, with "unknown" kept distinct from "false".
    """
    src, tgt = j.source, j.target
    integral = src.classify().integral and tgt.classify().integral
    if integral:
        lp = src.presented_group()
        injective = True
        for d in _gp_kernel_basis(j):
            if not lp.contains(d):
                injective = False
                break
        if not injective:
            return KummerCheck("false", False, None, "the induced group map has nontrivial kernel")
        witnesses = {}
        for i in range(tgt.num_generators):
            w = _multiplier_witness(j, i, bounds)
            if w is None:
                return KummerCheck(
                    "false",
                    True,
                    None,
                    f"no multiple of generator {tgt.names[i]} lies in the image",
                )
            m, p = w
            # re-verify through normal forms
            if tgt.normal_form(word_scale(m, tgt.generator(i))) != tgt.normal_form(j.apply(p)):
                raise ValidationError("multiplier witness failed normal-form verification")
            witnesses[tgt.names[i]] = (m, p)
        return KummerCheck("true", True, witnesses, "exact lattice and cone computation")
    # bounded three-valued checks
    for u in word_ball(src.num_generators, bounds.search_bound):
        for v in word_ball(src.num_generators, bounds.search_bound):
            if grlex_key(v) <= grlex_key(u):
                continue
            if src.normal_form(u) != src.normal_form(v) and tgt.normal_form(
                j.apply(u)
            ) == tgt.normal_form(j.apply(v)):
                return KummerCheck("false", False, None, "injectivity fails on a bounded witness pair")
    witnesses = {}
    for i in range(tgt.num_generators):
        found = None
        for m in range(1, bounds.search_bound + 1):
            target_nf = tgt.normal_form(word_scale(m, tgt.generator(i)))
            for p in word_ball(src.num_generators, bounds.search_bound):
                if tgt.normal_form(j.apply(p)) == target_nf:
                    found = (m, p)
                    break
            if found:
                break
        if not found:
            return KummerCheck("unknown", None, None, "bounded multiplier search was inconclusive")
        witnesses[tgt.names[i]] = found
    return KummerCheck("unknown", None, witnesses, "multipliers found but injectivity not certified (non-integral input)")


class DenominatorSystem:
    """A verified Kummer homomorphism with its index data and folding rule."""

    def __init__(self, j: MonoidHom, *, bounds: Bounds = DEFAULT_BOUNDS):
        src, tgt = j.source, j.target
        if not (src.classify().integral and tgt.classify().integral):
            raise InputError("denominator systems require integral source and target")
        check = is_kummer(j, bounds=bounds)
        if not check.holds:
            raise ValidationError(f"homomorphism is not Kummer: {check.reason}")
        self.j = j
        self.bounds = bounds
        self.witnesses = check.witnesses
        self.source_group = src.presented_group()
        self.target_group = tgt.presented_group()
        self.gp_map = LatticeMap(
            self.source_group,
            self.target_group,
            tuple(tuple(row) for row in j.matrix()),
        )
        # Q^gp modulo (L_Q + j(Z^nP))
        cols = [list(c) for c in self.target_group.relation_columns]
        jmat = j.matrix()
        for c in range(src.num_generators):
            cols.append([jmat[i][c] for i in range(tgt.num_generators)])
        self.quotient = PresentedGroup(tgt.num_generators, cols)
        self.index_group: FgAbelianGroup = self.quotient.fg_group()
        order = self.index_group.order()
        if order is None:
            raise InputError("Kummer index is infinite; this cannot happen for a verified Kummer map")
        self.index = order
        self.simplicial = self._detect_simplicial()
        if self.simplicial:
            self.degrees = tuple(jmat[i][i] for i in range(src.num_generators))
            self.fundamental_domain = self._box_domain()
        else:
            self.degrees = None
            self.fundamental_domain = tuple(
                tuple(rep) for rep in self.quotient.coset_representatives()
            )
        self._rep_by_class = {
            self.quotient.canonical_form(list(rep)): rep for rep in self.fundamental_domain
        }
        if len(self._rep_by_class) != self.index:
            raise ValidationError("fundamental domain is not a transversal")

    def _detect_simplicial(self) -> bool:
        src, tgt = self.j.source, self.j.target
        if src.relations or tgt.relations:
            return False
        if src.num_generators != tgt.num_generators:
            return False
        jmat = self.j.matrix()
        n = src.num_generators
        for i in range(n):
            for c in range(n):
                if i == c:
                    if jmat[i][c] < 1:
                        return False
                elif jmat[i][c] != 0:
                    return False
        return True

    def _box_domain(self):
        reps = [()]
        for d in self.degrees:
            reps = [r + (v,) for r in reps for v in range(d)]
        return tuple(sorted(reps))

    # -- degrees

    def degree_of_q_word(self, q_word) -> tuple:
        """iota_Q of a Q-word, as a plain vector in Z^nQ."""
        return tuple(self.j.target.check_word(q_word))

    def fold(self, w) -> tuple:
        """(representative, shift) with w = rep + j^gp(shift) modulo L_Q."""
        w = tuple(w)
        if len(w) != self.j.target.num_generators:
            raise InputError("degree vector of wrong length")
        if self.simplicial:
            rep = tuple(c % d for c, d in zip(w, self.degrees))
            shift = tuple((c - r) // d for c, r, d in zip(w, rep, self.degrees))
            return rep, shift
        rep = self._rep_by_class[self.quotient.canonical_form(list(w))]
        diff = [a - b for a, b in zip(w, rep)]
        jmat = self.j.matrix()
        n_p = self.j.source.num_generators
        cols = n_p + len(self.target_group.relation_columns)
        mat = [[0] * cols for _ in range(len(w))]
        for i in range(len(w)):
            for c in range(n_p):
                mat[i][c] = jmat[i][c]
            for c, col in enumerate(self.target_group.relation_columns):
                mat[i][n_p + c] = col[i]
        sol = SmithNormalForm(mat).solve(diff)
        if sol is None:
            raise ValidationError("fold failed; representative not in the same class")
        return rep, tuple(sol[:n_p])

    def degree_str(self, w) -> str:
        w = tuple(w)
        if self.simplicial:
            fracs = [Fraction(c, d) for c, d in zip(w, self.degrees)]
            if len(fracs) == 1:
                return str(fracs[0])
            return "(" + ", ".join(str(f) for f in fracs) + ")"
        return "(" + ", ".join(str(c) for c in w) + ")"

    def parse_degree(self, text: str) -> tuple:
        """Inverse of degree_str for simplicial systems."""
        text = text.strip()
        if text.startswith("(") and text.endswith(")"):
            parts = [p.strip() for p in text[1:-1].split(",")]
        else:
            parts = [text]
        if not self.simplicial:
            return tuple(int(p) for p in parts)
        if len(parts) != len(self.degrees):
            raise InputError(f"degree needs {len(self.degrees)} components")
        out = []
        for p, d in zip(parts, self.degrees):
            val = Fraction(p) * d
            if val.denominator != 1:
                raise InputError(f"degree {p} is not a multiple of 1/{d}")
            out.append(int(val))
        return tuple(out)

    def __repr__(self):
        return f"DenominatorSystem(index={self.index}, group={self.index_group})"


def make_denominator_system(j: MonoidHom, *, bounds: Bounds = DEFAULT_BOUNDS) -> DenominatorSystem:
    return DenominatorSystem(j, bounds=bounds)


def lift_degree(d: DenominatorSystem, w) -> tuple:
    """The graded-lex least Q-word q with iota(q) = w modulo j^gp(P^gp)."""
    w = tuple(w)
    if d.simplicial:
        return tuple(c % deg for c, deg in zip(w, d.degrees))
    tgt = d.j.target
    jmat = d.j.matrix()
    cols = [list(c) for c in d.target_group.relation_columns]
    for c in range(d.j.source.num_generators):
        cols.append([jmat[i][c] for i in range(tgt.num_generators)])
    subgroup = PresentedGroup(tgt.num_generators, cols)
    degree = 0
    while degree <= d.bounds.piece_height + sum(abs(c) for c in w):
        for q in word_ball(tgt.num_generators, degree):
            if sum(q) != degree:
                continue
            diff = [a - b for a, b in zip(q, w)]
            if subgroup.contains(diff):
                return q
        degree += 1
    raise ResourceError("no representative found within the degree budget")


def induced_kernel(d: DenominatorSystem, k_a: SubmonoidGens, *, bounds: Bounds | None = None) -> SubmonoidGens:
    """The kernel K_B of the extended structure on Q.

    Characterised by: q lies in K_B iff some positive multiple of q lies in
    j(K_A).  Computed exactly in the integral case via cone projection.
    """
    bounds = bounds or d.bounds
    src, tgt = d.j.source, d.j.target
    if k_a.ambient != src:
        raise InputError("K_A must live in the source monoid")
    if k_a.is_trivial:
        return SubmonoidGens(tgt, [])
    image_cols = [list(d.j.apply(g)) for g in k_a.generators]
    if d.simplicial and all(sum(1 for c in g if c) == 1 and max(g) == 1 for g in k_a.generators):
        support = sorted(i for g in k_a.generators for i, c in enumerate(g) if c)
        return SubmonoidGens(tgt, [tgt.generator(i) for i in support])
    n = tgt.num_generators
    subspace = [list(c) for c in d.target_group.relation_columns]
    ineq_rows = project_generated_cone(n, image_cols, subspace)
    # Hilbert generators of {x in N^n : rows . x >= 0} via slack variables
    s = len(ineq_rows)
    eq = []
    for r_i, row in enumerate(ineq_rows):
        eq.append(list(row) + [-1 if j_ == r_i else 0 for j_ in range(s)])
    if not eq:
        gens = [tgt.generator(i) for i in range(n)]
        return SubmonoidGens(tgt, gens)
    sols = minimal_solutions(eq, n + s, bounds=bounds)
    gens = sorted({t[:n] for t in sols if any(t[:n])}, key=grlex_key)
    return SubmonoidGens(tgt, gens)


def kernel_multiplier(d: DenominatorSystem, k_a: SubmonoidGens, q_word, *, max_m: int | None = None):
    """The least m >= 1 with m*q in j(K_A), or None; exhaustive up to max_m."""
    tgt = d.j.target
    image = SubmonoidGens(tgt, [d.j.apply(g) for g in k_a.generators])
    limit = max_m or d.index
    for m in range(1, limit + 1):
        if image.contains(word_scale(m, tgt.check_word(q_word))) is True:
            return m
    return None
