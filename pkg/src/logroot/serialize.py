"""Deterministic text rendering of the package's objects.

Shared by the command-line reports and the golden-file tests: identical
inputs must render byte-identically, so ordering is always explicit.
"""

from __future__ import annotations

from .lattice import FgAbelianGroup
from .linalg import Matrix
from .monoid import FpMonoid
from .parabolic import ParabolicSheaf
from .poly import RingElement


def fmt_group(g: FgAbelianGroup) -> str:
    parts = []
    if g.free_rank == 1:
        parts.append("Z")
    elif g.free_rank > 1:
        parts.append(f"Z^{g.free_rank}")
    parts.extend(f"Z/{d}" for d in g.torsion_invariants)
    return " x ".join(parts) if parts else "0"


def fmt_flag(value) -> str:
    if value is None:
        return "unknown"
    return "true" if value else "false"


def fmt_value(e: RingElement) -> str:
    s = str(e)
    if " + " in s or " - " in s:
        return f"({s})"
    return s


def fmt_matrix(m: Matrix) -> str:
    rows = ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in m.data)
    return f"{m.rows}x{m.cols} [{rows}]"


def fmt_monomial(names, exponents, *, default: str = "1") -> str:
    parts = []
    for name, k in zip(names, exponents):
        if k == 1:
            parts.append(name)
        elif k != 0:
            parts.append(f"{name}^{k}")
    return "*".join(parts) if parts else default


def fmt_term(algebra, coef: RingElement, tvec, qvec, gen_name: str) -> str:
    factors = []
    cs = fmt_value(coef)
    sign = ""
    if cs == "-1":
        sign = "-"
    elif cs != "1":
        factors.append(cs)
    tmon = fmt_monomial(algebra.t_names(), tvec, default="")
    if tmon:
        factors.append(tmon)
    qmon = fmt_monomial(algebra.x_names(), qvec, default="")
    if qmon:
        factors.append(qmon)
    factors.append(gen_name)
    return sign + "*".join(factors)


def join_terms(terms) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out


def sheaf_lines(e: ParabolicSheaf, *, label: str) -> list[str]:
    d = e.algebra.denominators
    out = [f"slots = {len(e.domain)}"]
    for v in e.domain:
        mod = e.slots[v]
        line = f"slot {d.degree_str(v)} = rank {mod.rank}"
        if mod.relations is not None and mod.relations.rows:
            line += f" relations {fmt_matrix(mod.relations)}"
        out.append(line)
    for v in e.domain:
        for g in range(e.rank):
            name = e.algebra.q_monoid.names[g]
            out.append(f"map {d.degree_str(v)} {name} = {fmt_matrix(e.map(v, g))}")
    return out


def presentation_lines(n) -> list[str]:
    algebra = n.algebra
    d = algebra.denominators
    out = [f"generators = {n.num_generators}"]
    names = [f"g{i}" for i in range(n.num_generators)]
    for i, deg in enumerate(n.gen_degrees):
        out.append(f"gen {names[i]} : {d.degree_str(deg)}")
    for idx, row in enumerate(n.relations):
        terms = []
        for a, entry in enumerate(row.entries):
            for coef, tvec, qvec in entry:
                terms.append(fmt_term(algebra, coef, tvec, qvec, names[a]))
        out.append(f"relation {idx} = " + join_terms(terms))
    return out


def monoid_lines(m: FpMonoid) -> list[str]:
    out = [f"generators = {' '.join(m.names) if m.names else '(none)'}"]
    for u, v in m.relations:
        out.append(f"relation {m.word_str(u)} = {m.word_str(v)}")
    return out


def algebra_lines(b) -> list[str]:
    d = b.denominators
    out = [
        f"ring = {b.ring.kind}",
        f"simplicial = {fmt_flag(b.simplicial)}",
        f"index = {d.index}",
        f"index_group = {fmt_group(d.index_group)}",
    ]
    for i in range(b.p_monoid.num_generators):
        out.append(f"degree t_{b.p_monoid.names[i]} = {d.degree_str(b.t_degree(i))}")
    for g in range(b.q_monoid.num_generators):
        out.append(f"degree x_{b.q_monoid.names[g]} = {d.degree_str(b.x_degree(g))}")
    for xword, value, pword in b.defining_relations():
        lhs = fmt_monomial(b.x_names(), xword)
        rhs_t = fmt_monomial(b.t_names(), pword)
        out.append(f"relation {lhs} = {fmt_value(value)} * {rhs_t}")
    return out
