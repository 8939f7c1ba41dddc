"""Exact rational linear feasibility and cone projection via Fourier-Motzkin.

Everything works with Fractions on small systems: decide feasibility of
{A x = b, x_i >= 0 for selected i}, produce a rational witness, and project
a cone presented by generators-and-subspace onto a coordinate subspace as a
finite list of homogeneous inequalities.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

# an affine form is (coeffs: list[Fraction], constant: Fraction), meaning
# sum(coeffs[i] * t_i) + constant


def _eliminate_equalities(eq_rows, rhs, nvars):
    """Parameterize {x : A x = b}; returns None when inconsistent.

    Output: (param_count, express) where express[i] is the affine form of x_i
    in the parameters.
    """
    rows = [[Fraction(e) for e in row] + [Fraction(b)] for row, b in zip(eq_rows, rhs)]
    piv_of_col = {}
    r = 0
    for c in range(nvars):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [e * inv for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_of_col[c] = r
        r += 1
    for i in range(r, len(rows)):
        if rows[i][nvars] != 0:
            return None
    free_cols = [c for c in range(nvars) if c not in piv_of_col]
    param_index = {c: k for k, c in enumerate(free_cols)}
    express = []
    for c in range(nvars):
        if c in param_index:
            coeffs = [Fraction(0)] * len(free_cols)
            coeffs[param_index[c]] = Fraction(1)
            express.append((coeffs, Fraction(0)))
        else:
            row = rows[piv_of_col[c]]
            coeffs = [-row[fc] for fc in free_cols]
            express.append((coeffs, row[nvars]))
    return len(free_cols), express


def _fm_reduce(ineqs, nparams):
    """Eliminate all parameters from affine forms required >= 0.

    Returns (feasible, stack) where stack records, per eliminated parameter,
    the lower and upper bound forms used for back-substitution.
    """
    current = [(list(c), k) for c, k in ineqs]
    stack = []
    for t in range(nparams - 1, -1, -1):
        lowers, uppers, rest = [], [], []
        for coeffs, const in current:
            a = coeffs[t]
            body = (coeffs[:t], const)
            if a > 0:
                lowers.append((a, body))  # t >= -(body)/a
            elif a < 0:
                uppers.append((a, body))  # t <= -(body)/a
            else:
                rest.append(body)
        new = list(rest)
        for al, (cl, kl) in lowers:
            for au, (cu, ku) in uppers:
                # from al*t + l >= 0 and au*t + u >= 0 (au < 0):
                # combine to eliminate t: (-au)*l + al*u >= 0
                coeffs = [(-au) * a + al * b for a, b in zip(cl, cu)]
                new.append((coeffs, (-au) * kl + al * ku))
        stack.append((t, lowers, uppers))
        current = new
    feasible = all(const >= 0 for _, const in current)
    return feasible, stack


def _evaluate(body, values):
    coeffs, const = body
    return sum(c * v for c, v in zip(coeffs, values)) + const


def feasible_point(eq_rows, rhs, nonneg, nvars):
    """A rational x with A x = b and x_i >= 0 for i in nonneg, else None."""
    if not eq_rows:
        return [Fraction(0)] * nvars
    param = _eliminate_equalities(eq_rows, rhs, nvars)
    if param is None:
        return None
    nparams, express = param
    ineqs = [express[i] for i in nonneg]
    feasible, stack = _fm_reduce(ineqs, nparams)
    if not feasible:
        return None
    values = [Fraction(0)] * nparams
    for t, lowers, uppers in reversed(stack):
        lo = None
        for a, body in lowers:
            cand = -_evaluate(body, values) / a
            lo = cand if lo is None else max(lo, cand)
        hi = None
        for a, body in uppers:
            cand = -_evaluate(body, values) / a
            hi = cand if hi is None else min(hi, cand)
        if lo is not None and hi is not None:
            values[t] = (lo + hi) / 2
        elif lo is not None:
            values[t] = lo
        elif hi is not None:
            values[t] = min(hi, Fraction(0))
        else:
            values[t] = Fraction(0)
    return [_evaluate(express[i], values) for i in range(nvars)]


def project_generated_cone(n: int, generator_cols, subspace_cols):
    """Inequality description of cone(generators) + span(subspace) in Q^n.

    Returns a list of integer rows r meaning r . x >= 0; the projected cone is
    exactly the solution set (equalities appear as opposite pairs).
    """
    g = len(generator_cols)
    k = len(subspace_cols)
    # variables: x (n, parameters of interest), p (g, >= 0), z (k, free)
    # inequalities encode x - Gp - Cz = 0 as two families, plus p >= 0;
    # eliminate p and z, keeping x.
    total = n + g + k
    ineqs = []
    for i in range(n):
        coeffs = [Fraction(0)] * total
        coeffs[i] = Fraction(1)
        for j in range(g):
            coeffs[n + j] = Fraction(-generator_cols[j][i])
        for j in range(k):
            coeffs[n + g + j] = Fraction(-subspace_cols[j][i])
        ineqs.append((coeffs, Fraction(0)))
        ineqs.append(([-c for c in coeffs], Fraction(0)))
    for j in range(g):
        coeffs = [Fraction(0)] * total
        coeffs[n + j] = Fraction(1)
        ineqs.append((coeffs, Fraction(0)))
    current = ineqs
    for t in range(total - 1, n - 1, -1):
        lowers, uppers, rest = [], [], []
        for coeffs, const in current:
            a = coeffs[t]
            body = (coeffs[:t], const)
            if a > 0:
                lowers.append((a, body))
            elif a < 0:
                uppers.append((a, body))
            else:
                rest.append(body)
        new = list(rest)
        for al, (cl, kl) in lowers:
            for au, (cu, ku) in uppers:
                coeffs = [(-au) * a + al * b for a, b in zip(cl, cu)]
                new.append((coeffs, (-au) * kl + al * ku))
        # drop trivial rows and duplicates to keep FM from exploding
        seen = set()
        pruned = []
        for coeffs, const in new:
            if all(c == 0 for c in coeffs):
                continue
            key = _normalize_row(coeffs)
            if key not in seen:
                seen.add(key)
                pruned.append(([Fraction(c) for c in key], Fraction(0)))
        current = pruned
    rows = []
    seen = set()
    for coeffs, _ in current:
        key = _normalize_row(coeffs)
        if key not in seen:
            seen.add(key)
            rows.append(list(key))
    return rows


def _normalize_row(coeffs):
    denom = 1
    for c in coeffs:
        denom = denom * Fraction(c).denominator // gcd(denom, Fraction(c).denominator)
    ints = [int(Fraction(c) * denom) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    if g > 1:
        ints = [c // g for c in ints]
    return tuple(ints)
