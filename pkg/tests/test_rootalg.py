from math import gcd

import pytest

from logroot.chart import make_chart
from logroot.errors import UnsupportedOperationError
from logroot.fields import GF, QQ
from logroot.kummer import make_denominator_system
from logroot.monoid import FpMonoid, MonoidHom
from logroot.poly import BaseRing, parse_element
from logroot.rootalg import build_root_algebra, classify_stack


QS = BaseRing(QQ, ("s",))


def droot_algebra(d, ring=None, value="s"):
    ring = ring or QS
    p = FpMonoid.free(1, ("a",))
    q = FpMonoid.free(1, ("q",))
    dd = make_denominator_system(MonoidHom(p, q, [(d,)]))
    return build_root_algebra(make_chart(p, ring, [parse_element(ring, value)]), dd)


def test_presentation_of_the_root_algebra():
    b = droot_algebra(2)
    assert b.simplicial
    assert b.t_degree(0) == (2,)
    assert b.x_degree(0) == (1,)
    [(xword, value, pword)] = b.defining_relations()
    assert xword == (2,) and pword == (1,) and value == QS.variable("s")


def test_identity_denominators_give_the_base_back():
    b = droot_algebra(1)
    assert b.denominators.index == 1
    for w in [(-2,), (0,), (3,)]:
        piece = b.graded_piece(w)
        assert piece.rank_hint == 1 and piece.complete


def test_gf2_cube_root():
    ring = BaseRing(GF(2))
    b = droot_algebra(3, ring=ring, value="1")
    for w in range(-3, 4):
        assert b.graded_piece((w,)).rank_hint == 1
        assert b.structure_constant((w,), 0) == ring.one()


def test_structure_constants():
    b = droot_algebra(2)
    assert str(b.structure_constant((0,), 0)) == "1"
    assert str(b.structure_constant((1,), 0)) == "s"
    b3 = droot_algebra(3)
    assert [str(b3.structure_constant((w,), 0)) for w in range(3)] == ["1", "1", "s"]


def test_graded_piece_examples():
    b = droot_algebra(2)
    piece = b.graded_piece((1,))
    assert piece.generators == (((0,), (1,)),)  # x
    neg = b.graded_piece((-1,))
    assert neg.generators == (((-1,), (1,)),)  # x * t^-1
    zero = b.graded_piece((0,))
    assert zero.generators == (((0,), (0,)),)  # 1


def test_homogeneity_of_relations():
    b = droot_algebra(3)
    for xword, _value, pword in b.defining_relations():
        left = tuple(xword)
        right = b.t_degree(0)
        assert left == tuple(k * 1 for k in left)
        assert sum(left) == 3 and right == (3,)


def test_structure_constant_path_commutation():
    # c(w, g) c(w + e_g, g') == c(w, g') c(w + e_g', g) on a rank-2 algebra
    p = FpMonoid.free(2, ("a", "b"))
    q = FpMonoid.free(2, ("x", "y"))
    dd = make_denominator_system(MonoidHom(p, q, [(2, 0), (0, 3)]))
    ring = BaseRing(QQ, ("s", "u"))
    b = build_root_algebra(
        make_chart(p, ring, [ring.variable("s"), ring.variable("u")]), dd
    )
    for w in [(-1, -1), (0, 0), (1, 2), (3, 5), (0, 2)]:
        for g1 in range(2):
            for g2 in range(2):
                lhs = b.structure_constant(w, g1) * b.structure_constant(
                    tuple(a + d for a, d in zip(w, b.x_degree(g1))), g2
                )
                rhs = b.structure_constant(w, g2) * b.structure_constant(
                    tuple(a + d for a, d in zip(w, b.x_degree(g2))), g1
                )
                assert lhs == rhs


def test_period_product_identity():
    # multiplying a full period in one direction accumulates the chart value
    b = droot_algebra(4)
    for start in range(-2, 3):
        w = (start,)
        acc = b.ring.one()
        for _ in range(4):
            acc = acc * b.structure_constant(w, 0)
            w = (w[0] + 1,)
        assert acc == b.values[0]


def test_simplicial_rank_law():
    p = FpMonoid.free(2, ("a", "b"))
    q = FpMonoid.free(2, ("x", "y"))
    dd = make_denominator_system(MonoidHom(p, q, [(2, 0), (0, 2)]))
    ring = BaseRing(GF(5))
    b = build_root_algebra(make_chart(p, ring, [ring.one(), ring.constant(2)]), dd)
    for w1 in range(-2, 3):
        for w2 in range(-2, 3):
            assert b.graded_piece((w1, w2)).rank_hint == 1


def test_classify_stack_grid():
    for d in range(1, 7):
        for p in (2, 3, 5):
            ring = BaseRing(GF(p))
            b = droot_algebra(d, ring=ring, value="1")
            c = classify_stack(b)
            assert c.finite and c.tame
            assert c.dm == (gcd(d, p) == 1)
    assert classify_stack(droot_algebra(6)).dm  # characteristic zero


def test_non_simplicial_pieces_are_bounded_presentations():
    torsion_q = FpMonoid(2, [((2, 0), (0, 2))], ("a", "b"))
    j = MonoidHom(FpMonoid.free(1, ("p",)), torsion_q, [(1, 1)])
    dd = make_denominator_system(j)
    b = build_root_algebra(make_chart(FpMonoid.free(1, ("p",)), QS, [QS.variable("s")]), dd)
    assert not b.simplicial
    piece = b.graded_piece((1, 0))
    assert piece.rank_hint == 1 and not piece.complete
    with pytest.raises(UnsupportedOperationError):
        b.structure_constant((0, 0), 0)
    mat = b.piece_multiplication_matrix((0, 0), 0)
    assert mat.rows == 1 and mat.cols == 1
