from logroot.lattice import (
    FgAbelianGroup,
    LatticeMap,
    PresentedGroup,
    cokernel_group,
    membership,
)


def test_group_canonical_form():
    assert str(FgAbelianGroup(2)) == "Z x Z"
    assert str(FgAbelianGroup(0, (2, 6))) == "Z/2 x Z/6"
    assert str(FgAbelianGroup(0)) == "0"
    assert FgAbelianGroup(0, (6,)).order() == 6
    assert FgAbelianGroup(1).order() is None


def test_cokernel_examples():
    z2 = PresentedGroup(2)
    f = LatticeMap(z2, z2, ((2, 0), (0, 3)))
    group, order, reps = cokernel_group(f)
    assert group == FgAbelianGroup(0, (6,))
    assert order == 6
    assert len(reps) == 6
    assert len(set(reps)) == 6

    z1 = PresentedGroup(1)
    double = LatticeMap(z1, z1, ((2,),))
    group, order, reps = cokernel_group(double)
    assert group == FgAbelianGroup(0, (2,)) and order == 2
    assert sorted(reps) == [(0,), (1,)]

    zero_map = LatticeMap(PresentedGroup(0), z1, ())
    group, order, reps = cokernel_group(zero_map)
    assert group == FgAbelianGroup(1) and order is None and reps is None


def test_membership():
    assert membership([[2]], [4]) == [2]
    assert membership([[2]], [3]) is None
    # image {(x, y) : x + y = 0 mod 3} as the span of (1, -1) and (0, 3)
    m = [[1, 0], [-1, 3]]
    u = membership(m, [1, 2])
    assert u is not None
    assert [m[0][0] * u[0] + m[0][1] * u[1], m[1][0] * u[0] + m[1][1] * u[1]] == [1, 2]


def test_presented_group_classes():
    g = PresentedGroup(2, [[2, -2]])
    assert g.same_class([2, 0], [0, 2])
    assert not g.same_class([1, 0], [0, 1])
    assert g.contains([4, -4])
    assert not g.contains([1, -1])
    assert g.fg_group() == FgAbelianGroup(1, (2,))
    z = g.subgroup_preimage([6, -6])
    assert z == [3]


def test_coset_representatives_are_transversal():
    g = PresentedGroup(2, [[2, 0], [0, 3]])
    reps = g.coset_representatives()
    assert len(reps) == 6
    classes = {g.canonical_form(list(r)) for r in reps}
    assert len(classes) == 6
