"""Finitely presented commutative monoids and their word problem.

Every monoid here is N^n modulo finitely many relations between exponent
vectors.  Constructing the monoid completes the relations into a confluent
rewriting system, after which congruence is decided by comparing normal
forms.
"""

from logroot import (
    FpMonoid,
    MonoidHom,
    SubmonoidGens,
    cokernel_analyze,
    kernel,
    kernel_closure,
    quotient,
)

# A free monoid has nothing to rewrite.
free2 = FpMonoid.free(2, ("a", "b"))
print("free monoid, NF(3a+5b) =", free2.word_str(free2.normal_form((3, 5))))

# One relation makes the word problem interesting: a + b = 2b identifies
# many words without being cancellative.
m = FpMonoid(2, [((1, 1), (0, 2))], ("a", "b"))
print("\nmonoid <a,b | a+b = 2b>")
print("NF(a+b) =", m.word_str(m.normal_form((1, 1))))
print("a ~ b ?", m.congruent((1, 0), (0, 1)))

classification = m.classify()
print("integral:", classification.integral)
print("groupification:", classification.group)
u, v = classification.non_integral_witness
print(
    "witness to failure of cancellation:",
    m.word_str(u), "and", m.word_str(v),
    "have equal group images but distinct normal forms",
)

# The kernel of a homomorphism can be trivial without injectivity: the
# addition map N^2 -> N.
free1 = FpMonoid.free(1, ("t",))
addition = MonoidHom(free2, free1, [(1,), (1,)])
print("\naddition N^2 -> N")
print("kernel generators:", kernel(addition).generators, "(trivial)")
print("but a and b have the same image:", addition.apply((1, 0)) == addition.apply((0, 1)))
analysis = cokernel_analyze(addition)
print("is it a cokernel?", analysis.verdict, "--", analysis.reason)

# Kernel closure: the smallest kernel containing a submonoid.  Inside N the
# numerical monoid <2,3> closes up to everything, because 1 + 2 = 3.
closure = kernel_closure(free1, SubmonoidGens(free1, [(2,), (3,)]))
print("\nkernel closure of <2,3> in N:", closure.generators)

# Quotients by a submonoid add the relations s = 0.  Killing the diagonal of
# N^2 produces the integers: every class becomes invertible.
z_like, projection = quotient(free2, SubmonoidGens(free2, [(1, 1)]))
print("\nN^2 / <(1,1)>:")
print("groupification:", z_like.classify().group)
print("a + b ~ 0 ?", z_like.is_zero((1, 1)))
analysis = cokernel_analyze(projection)
print("the projection is a cokernel:", analysis.verdict)
print("free cover uses", analysis.free_cover.source.num_generators, "generator(s)")
