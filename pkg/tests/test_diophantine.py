import random

from logroot.diophantine import (
    has_nonneg_solution,
    minimal_inhomogeneous_solutions,
    minimal_solutions,
)

from oracles import brute_min_solutions


def test_single_equation():
    sols = minimal_solutions([[1, 1, -2]], 3)
    assert sols == [(0, 2, 1), (1, 1, 1), (2, 0, 1)]


def test_against_brute_force():
    rng = random.Random(5)
    for _ in range(60):
        rows = rng.randint(1, 2)
        n = rng.randint(1, 4)
        a = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rows)]
        got = minimal_solutions(a, n)
        want = brute_min_solutions(a, n, max_coord=6)
        # brute force only sees the box; everything it found must be found,
        # and everything CD found inside the box must be brute-minimal
        boxed = [s for s in got if all(c <= 6 for c in s)]
        assert boxed == want, (a, boxed, want)


def test_inhomogeneous():
    # x - 2y = 3
    sols = minimal_inhomogeneous_solutions([[1, -2]], [3])
    assert sols == [(3, 0)]
    assert has_nonneg_solution([[1, -2]], [3])
    assert not has_nonneg_solution([[2]], [3])
    assert has_nonneg_solution([[2]], [6])
    # minimal solutions of x + y = 2
    sols = minimal_inhomogeneous_solutions([[1, 1]], [2])
    assert sols == [(0, 2), (1, 1), (2, 0)]


def test_solution_monoid_generation():
    # every small solution decomposes into minimal ones (Hilbert property)
    a = [[3, -1, -2]]
    minimals = set(minimal_solutions(a, 3))
    for x in range(5):
        for y in range(8):
            for z in range(8):
                if 3 * x - y - 2 * z == 0 and (x, y, z) != (0, 0, 0):
                    # greedy decomposition must terminate at zero
                    v = (x, y, z)
                    progress = True
                    while any(v) and progress:
                        progress = False
                        for m in minimals:
                            if all(a_ >= b_ for a_, b_ in zip(v, m)):
                                v = tuple(a_ - b_ for a_, b_ in zip(v, m))
                                progress = True
                                break
                    assert not any(v), (x, y, z)
