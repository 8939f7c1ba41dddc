"""Kummer maps, fundamental domains, and the graded root algebra.

Adjoining a d-th root of a line bundle with a section is, in coordinates,
the extension R[t^{+-1}] -> R[t^{+-1}, x]/(x^d - f t).  The package builds
this algebra from a chart and a verified Kummer map, grades it by the target
weight group, and reads off structure constants and the stack classification.
"""

from logroot import (
    FpMonoid,
    GF,
    MonoidHom,
    QQ,
    BaseRing,
    build_root_algebra,
    classify_stack,
    is_kummer,
    lift_degree,
    make_chart,
    make_denominator_system,
    parse_element,
)

p = FpMonoid.free(1, ("a",))
q = FpMonoid.free(1, ("q",))

# multiplication by d on N is the model Kummer map
j = MonoidHom(p, q, [(3,)])
check = is_kummer(j)
print("j = multiplication by 3 on N; Kummer?", check.verdict)
print("multiplier witnesses:", {g: (m, w) for g, (m, w) in check.witnesses.items()})

d = make_denominator_system(j)
print("index:", d.index, "| index group:", d.index_group)
print("fundamental domain:", [d.degree_str(v) for v in d.fundamental_domain])
print("lift of degree -1/3:", lift_degree(d, (-1,)))

# the coordinate algebra of the cube root of (O, s) over QQ[s]
ring = BaseRing(QQ, ("s",))
algebra = build_root_algebra(make_chart(p, ring, [parse_element(ring, "s")]), d)
print("\nalgebra:", algebra)
for xword, value, pword in algebra.defining_relations():
    print("defining relation: x^%d = %s * t" % (sum(xword), value))

print("structure constants along 0 -> 1/3 -> 2/3 -> 1:")
for w in range(3):
    print(f"  c({w}/3) =", algebra.structure_constant((w,), 0))

print("graded piece at -1/3:", algebra.graded_piece((-1,)).generators)

# tame always; Deligne-Mumford iff the index is prime to the characteristic
for char in (0, 2, 3):
    if char:
        fring = BaseRing(GF(char))
        alg = build_root_algebra(
            make_chart(p, fring, [fring.one()]), make_denominator_system(j)
        )
    else:
        alg = algebra
    c = classify_stack(alg)
    print(f"characteristic {c.characteristic}: tame = {c.tame}, DM = {c.dm}")
