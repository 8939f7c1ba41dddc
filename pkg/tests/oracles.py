"""Independent oracles for the test suite.

Everything here is deliberately brute force and avoids the code paths it is
used to check: congruence closure by union-find over a word ball, Diophantine
minimal solutions by exhaustive scan, invariant factors by gcd arithmetic,
and kernel membership by divisibility.
"""

from __future__ import annotations

from itertools import product
from math import gcd


def word_ball(n, max_degree):
    out = []
    for w in product(range(max_degree + 1), repeat=n):
        if sum(w) <= max_degree:
            out.append(w)
    return out


class UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry


def closure_partition(n, relations, internal_degree, compare_degree):
    """Congruence closure by union-find on the ball of internal_degree,
    restricted to words of compare_degree."""
    words = word_ball(n, internal_degree)
    index = {w: i for i, w in enumerate(words)}
    uf = UnionFind(len(words))
    for w in words:
        for u, v in relations:
            if all(a >= b for a, b in zip(w, u)):
                t = tuple(a - b + c for a, b, c in zip(w, u, v))
                if sum(t) <= internal_degree:
                    uf.union(index[w], index[t])
    groups = {}
    for w in words:
        if sum(w) <= compare_degree:
            groups.setdefault(uf.find(index[w]), set()).add(w)
    return {frozenset(g) for g in groups.values()}


def nf_partition(monoid, compare_degree):
    groups = {}
    for w in word_ball(monoid.num_generators, compare_degree):
        groups.setdefault(monoid.normal_form(w), set()).add(w)
    return {frozenset(g) for g in groups.values()}


def closure_agrees_with_nf(monoid, compare_degree=6, step=2, max_internal=20):
    """Deepen the closure ball until it matches normal-form equality, then
    insist the agreement persists two more levels.  Edges of the closure are
    genuine congruence steps, so agreement certifies the rewriting engine on
    the compared ball."""
    want = nf_partition(monoid, compare_degree)
    n = monoid.num_generators
    rels = monoid.relations
    agree_at = None
    for depth in range(compare_degree, max_internal + 1, step):
        if closure_partition(n, rels, depth, compare_degree) == want:
            agree_at = depth
            break
    if agree_at is None:
        return False
    for depth in (agree_at + step, agree_at + 2 * step):
        if closure_partition(n, rels, depth, compare_degree) != want:
            return False
    return True


def brute_min_solutions(rows, n, max_coord=6):
    """Minimal nonzero solutions of rows . x = 0 with x in a finite box."""
    sols = []
    for x in product(range(max_coord + 1), repeat=n):
        if not any(x):
            continue
        if all(sum(r[i] * x[i] for i in range(n)) == 0 for r in rows):
            sols.append(x)
    minimal = []
    for s in sols:
        if not any(all(a >= b for a, b in zip(s, t)) and s != t for t in sols):
            minimal.append(s)
    return sorted(minimal)


def invariant_factors_of_diagonal(diag):
    """Invariant factors of Z/d1 + ... + Z/dk by elementary arithmetic."""
    diag = [d for d in diag if d != 1]
    changed = True
    ds = list(diag)
    while changed:
        changed = False
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                g = gcd(ds[i], ds[j])
                l = ds[i] * ds[j] // g if g else 0
                if ds[j] % ds[i] != 0:
                    ds[i], ds[j] = g, l
                    changed = True
        ds = [d for d in ds if d != 1]
    return sorted(ds)


def face_multiplier_membership(q_word, degrees, ka_support, max_m):
    """Oracle for the extended kernel: does some m <= max_m satisfy
    m * q in j(K_A), with K_A the face on ka_support and j = diag(degrees)?"""
    for m in range(1, max_m + 1):
        ok = True
        for i, c in enumerate(q_word):
            if c == 0:
                continue
            if i not in ka_support or (m * c) % degrees[i] != 0:
                ok = False
                break
        if ok:
            return True
    return False
