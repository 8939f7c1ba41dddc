"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line (run pytest with -s to stream them)
and asserts the criterion exactly at its stated tolerance, including the
expected wall-clock budget.
"""

import pathlib
import random
import time
from math import gcd

import pytest

from logroot.chart import chart_kernel
from logroot.cli import run as cli_run
from logroot.equivalence import (
    graded_hom_dimension,
    monoidal_compat_check,
    psi,
    roundtrip_check,
)
from logroot.fields import GF
from logroot.kummer import induced_kernel, make_denominator_system
from logroot.monoid import (
    FpMonoid,
    MonoidHom,
    SubmonoidGens,
    cokernel_analyze,
    kernel,
    kernel_closure,
)
from logroot.parabolic import hom_dimension, parabolic_hom, parabolic_tensor
from logroot.rootalg import classify_stack
from logroot.testkit import (
    random_graded_presentation,
    random_parabolic_sheaf,
    random_presentation,
    random_simplicial_algebra,
)

from oracles import (
    closure_agrees_with_nf,
    face_multiplier_membership,
    invariant_factors_of_diagonal,
    word_ball,
)

GOLDEN = pathlib.Path(__file__).parent / "golden"


def announce(number, name, ok, elapsed, budget):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number} {name}: {status} ({elapsed:.1f}s / budget {budget}s)")
    assert ok, f"criterion {number} ({name}) failed"
    assert elapsed < budget, f"criterion {number} exceeded its {budget}s budget"


def test_criterion_1_word_problem_oracle():
    """Normal-form equality agrees exactly with brute-force congruence
    closure on all words of total degree <= 6, for 200 random presentations.

    The closure is computed by union-find over a word ball and the induced
    partition is compared on the degree <= 6 words; congruence chains may
    pass through words of higher degree, so the closure ball is deepened
    until the partition stabilises against the normal-form partition and
    persists for two further levels.
    """
    start = time.time()
    rng = random.Random(101)
    ok = True
    for _ in range(200):
        m = random_presentation(rng, max_gens=3, max_rels=3, max_entry=2)
        if not closure_agrees_with_nf(m, compare_degree=6, step=2, max_internal=22):
            ok = False
            break
    announce(1, "word-problem oracle", ok, time.time() - start, 60)


def test_criterion_2_counterexample_behaviors():
    start = time.time()
    free2, free1 = FpMonoid.free(2), FpMonoid.free(1)
    addition = MonoidHom(free2, free1, [(1,), (1,)])
    ok = kernel(addition).is_trivial
    # not injective: (1,0) and (0,1) are distinct with equal images
    ok = ok and free1.normal_form(addition.apply((1, 0))) == free1.normal_form(addition.apply((0, 1)))
    ok = ok and free2.normal_form((1, 0)) != free2.normal_form((0, 1))
    ok = ok and cokernel_analyze(addition).verdict == "false"
    closure = kernel_closure(free1, SubmonoidGens(free1, [(2,), (3,)]))
    ok = ok and closure.generators == ((1,),)
    announce(2, "section-2 counterexamples", ok, time.time() - start, 1)


def test_criterion_3_kummer_indices():
    start = time.time()
    ok = True
    for r in (1, 2, 3):
        import itertools

        for degrees in itertools.product((1, 2, 3, 4), repeat=r):
            j = MonoidHom(
                FpMonoid.free(r),
                FpMonoid.free(r),
                [tuple(degrees[i] if k == i else 0 for k in range(r)) for i in range(r)],
            )
            d = make_denominator_system(j)
            n = 1
            for deg in degrees:
                n *= deg
            ok = ok and d.index == n
            ok = ok and len(d.fundamental_domain) == n
            ok = ok and len(set(d.fundamental_domain)) == n
            # oracle: invariant factors of the diagonal by gcd arithmetic
            ok = ok and list(d.index_group.torsion_invariants) == invariant_factors_of_diagonal(
                list(degrees)
            )
            if not ok:
                break
    announce(3, "Kummer indices", ok, time.time() - start, 5)


def test_criterion_4_extended_kernel_characterization():
    """The computed extended kernel equals the multiplier description
    {q : exists m <= n with m q in K_A}, exhaustively on a window."""
    start = time.time()
    rng = random.Random(404)
    ok = True
    for _ in range(50):
        algebra = random_simplicial_algebra(rng, GF(7), max_rank=3, max_degree=4)
        k_a = chart_kernel(algebra.chart)
        k_b = induced_kernel(algebra.denominators, k_a)
        support = {i for g in k_a.generators for i, c in enumerate(g) if c}
        degrees = algebra.degrees
        n = algebra.denominators.index
        for q in word_ball(len(degrees), max(degrees) + 2):
            want = face_multiplier_membership(q, degrees, support, n)
            got = k_b.contains(q)
            if got != want:
                ok = False
                break
        if not ok:
            break
    announce(4, "extended kernel characterization", ok, time.time() - start, 30)


def test_criterion_5_roundtrips():
    start = time.time()
    rng = random.Random(505)
    ok = True
    for trial in range(100):
        field = GF(rng.choice([2, 5]))
        algebra = random_simplicial_algebra(rng, field, max_rank=rng.choice([1, 1, 2]), max_degree=4)
        sheaf = random_parabolic_sheaf(rng, algebra, max_components=3)
        forward = roundtrip_check(sheaf)
        backward = roundtrip_check(psi(sheaf))
        ok = ok and forward.iso and backward.iso
        ok = ok and set(forward.witnesses) == set(sheaf.domain)
        ok = ok and set(backward.witnesses) == set(sheaf.domain)
        ok = ok and all(w.is_invertible() for w in forward.witnesses.values())
        ok = ok and all(w.is_invertible() for w in backward.witnesses.values())
        if not ok:
            break
    announce(5, "equivalence round trips", ok, time.time() - start, 120)


def test_criterion_6_hom_oracle_equivalence():
    start = time.time()
    rng = random.Random(606)
    ok = True
    for _ in range(50):
        field = GF(rng.choice([2, 5]))
        algebra = random_simplicial_algebra(rng, field, max_rank=1, max_degree=4)
        e1 = random_parabolic_sheaf(rng, algebra, max_components=2)
        e2 = random_parabolic_sheaf(rng, algebra, max_components=2)
        direct = hom_dimension(e1, e2)
        graded = graded_hom_dimension(psi(e1), psi(e2))
        ok = ok and direct == graded
        if not ok:
            break
    announce(6, "hom dimension oracle", ok, time.time() - start, 60)


def test_criterion_7_stack_classification_grid():
    start = time.time()
    ok = True
    from logroot.chart import make_chart
    from logroot.poly import BaseRing
    from logroot.rootalg import build_root_algebra

    for d in range(1, 7):
        for p in (2, 3, 5):
            ring = BaseRing(GF(p))
            j = MonoidHom(FpMonoid.free(1, ("a",)), FpMonoid.free(1, ("q",)), [(d,)])
            algebra = build_root_algebra(
                make_chart(FpMonoid.free(1, ("a",)), ring, [ring.one()]),
                make_denominator_system(j),
            )
            c = classify_stack(algebra)
            ok = ok and c.finite and c.tame and c.dm == (gcd(d, p) == 1)
    announce(7, "tame/DM grid", ok, time.time() - start, 1)


def test_criterion_8_monoidal_compatibility():
    start = time.time()
    rng = random.Random(808)
    ok = True
    for _ in range(25):
        field = GF(rng.choice([2, 5]))
        algebra = random_simplicial_algebra(rng, field, max_rank=1, max_degree=3)
        n1 = random_graded_presentation(rng, algebra)
        n2 = random_graded_presentation(rng, algebra)
        report = monoidal_compat_check(n1, n2)
        ok = ok and report.iso and report.hom_dims_match
        # the adjunction dimension identity on a random triple
        e1 = random_parabolic_sheaf(rng, algebra, max_components=2)
        e2 = random_parabolic_sheaf(rng, algebra, max_components=2)
        e3 = random_parabolic_sheaf(rng, algebra, max_components=2)
        lhs = hom_dimension(parabolic_tensor(e1, e2), e3)
        rhs = hom_dimension(e1, parabolic_hom(e2, e3))
        ok = ok and lhs == rhs
        if not ok:
            break
    announce(8, "monoidal compatibility", ok, time.time() - start, 60)


def test_criterion_9_worked_example_golden():
    start = time.time()
    doc = str(GOLDEN / "droot.lr")
    ok = True
    for golden_name, argv in [
        ("droot_build_algebra_d2.txt", ["build-algebra", doc, "--name", "B2"]),
        ("droot_build_algebra_d3.txt", ["build-algebra", doc, "--name", "B3"]),
        ("droot_phi_structure_d2.txt", ["phi", doc, "--name", "N2"]),
        ("droot_phi_divisor_d2.txt", ["phi", doc, "--name", "N2x"]),
        ("droot_phi_structure_d3.txt", ["phi", doc, "--name", "N3"]),
        ("droot_phi_divisor_d3.txt", ["phi", doc, "--name", "N3x"]),
    ]:
        text, code = cli_run(argv)
        ok = ok and code == 0 and text == (GOLDEN / golden_name).read_text()
    # the emitted reports must show the expected content, not just match
    algebra_report, _ = cli_run(["build-algebra", doc, "--name", "B2"])
    ok = ok and "relation x_q^2 = s * t_a" in algebra_report
    unit_report, _ = cli_run(["phi", doc, "--name", "N2"])
    ok = ok and "map 1/2 q = 1x1 [[s]]" in unit_report
    divisor_report, _ = cli_run(["phi", doc, "--name", "N2x"])
    ok = ok and "slot 0 = rank 1 relations 1x1 [[s]]" in divisor_report
    announce(9, "worked example golden files", ok, time.time() - start, 1)
