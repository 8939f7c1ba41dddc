"""Charts into explicit rings, stalks at rational points, and the grading.

A chart sends each monoid generator to a ring element so that the monoid
relations hold as polynomial identities.  Generators whose value is a unit
generate the kernel of the induced structure; at a rational point the same
role is played by the values that do not vanish there.
"""

from logroot import (
    FpMonoid,
    QQ,
    BaseRing,
    RationalPoint,
    algebra_grading,
    df_quotient,
    make_chart,
    parse_element,
    stalk_df,
)

ring = BaseRing(QQ, ("s",))
free2 = FpMonoid.free(2, ("a", "b"))

# the normal-crossings-style chart a -> s, b -> s - 1
chart = make_chart(free2, ring, [parse_element(ring, "s"), parse_element(ring, "s - 1")])
print("chart:", chart)

# At s = 0 only the first value vanishes, so the stalk keeps one direction.
at_zero = stalk_df(chart, RationalPoint.make(ring, {"s": 0}))
print("\nstalk at s = 0")
print("kernel:", [free2.word_str(g) for g in at_zero.kernel.generators])
print("minimal chart here?", at_zero.chart_is_minimal_at_point)
print("stalk group:", at_zero.stalk.classify().group)

# At s = 2 both values are invertible and the stalk collapses entirely.
at_two = stalk_df(chart, RationalPoint.make(ring, {"s": 2}))
print("\nstalk at s = 2: everything dies:", at_two.stalk.is_zero((1, 1)))

# Globally, only units of QQ[s] (nonzero constants) count.
unit_chart = make_chart(free2, ring, [parse_element(ring, "s"), ring.one()])
data = df_quotient(unit_chart)
print("\nglobal quotient for a -> s, b -> 1")
print("kernel:", [free2.word_str(g) for g in data.kernel.generators])
print("unit discrepancies:", {k: str(v) for k, v in data.unit_discrepancies.items()})

# A chart must respect the relations: on <a | 2a = a> the value must be
# idempotent, so s is rejected and 1 is accepted.
idem = FpMonoid(1, [((2,), (1,))], ("a",))
try:
    make_chart(idem, ring, [parse_element(ring, "s")])
except Exception as err:
    print("\nrejected chart on <a | 2a = a>:", err)
ok = make_chart(idem, ring, [ring.one()])
print("accepted idempotent value:", ok.value((7,)))

# The grading of the monoid algebra: for integral monoids every graded piece
# has rank at most one; the non-cancellative example has a rank-two piece.
m = FpMonoid(2, [((1, 1), (0, 2))], ("a", "b"))
piece = algebra_grading(m, (1, 0))
print("\ndegree iota(a) piece of Z[<a,b | a+b=2b>]:")
print("classes:", [m.word_str(c) for c in piece.classes], "rank:", piece.rank)
