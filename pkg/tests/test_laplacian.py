from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import connected_graphs, path_graph, small_rationals
from orcurv import (
    build_complex,
    harmonic_laplacian,
    jump_normalizer,
    parallelepiped,
    parallelepiped_laplacian,
    weighted_laplacian,
)
from orcurv.errors import (
    InvalidLaplacian,
    IsolatedVertex,
    MissingWeight,
    NonPositiveLength,
    NonPositiveWeight,
)
from orcurv.laplacian import Laplacian, check_axioms


def test_harmonic_tetrahedron(solids):
    c = solids["tetrahedron"]
    L = harmonic_laplacian(c)
    for x in range(4):
        assert L[x, x] == -1
        assert all(L[x, y] == Fraction(1, 3) for y in range(4) if y != x)
        assert sum(L.row(x).values()) == 0


def test_harmonic_path():
    L = harmonic_laplacian(path_graph(3))
    assert L[1, 0] == L[1, 2] == Fraction(1, 2)
    assert L[0, 1] == 1


def test_harmonic_isolated():
    with pytest.raises(IsolatedVertex):
        harmonic_laplacian(build_complex(3, [(0, 1)]))


def test_weighted_star():
    c = build_complex(4, [(0, 1), (0, 2), (0, 3)])
    L = weighted_laplacian(c, {(0, 1): 1, (0, 2): 2, (3, 0): 2})
    assert [L[0, y] for y in range(4)] == [-1, Fraction(1, 5), Fraction(2, 5), Fraction(2, 5)]


def test_weighted_errors():
    c = path_graph(3)
    with pytest.raises(MissingWeight):
        weighted_laplacian(c, {(0, 1): 1})
    with pytest.raises(NonPositiveWeight):
        weighted_laplacian(c, {(0, 1): 1, (1, 2): 0})


@given(connected_graphs(), st.fractions(min_value=Fraction(1, 9), max_value=9, max_denominator=9))
def test_weight_scaling_invariance(c, k):
    w = {e: Fraction(i + 1, 3) for i, e in enumerate(c.edges)}
    assert weighted_laplacian(c, w) == weighted_laplacian(c, {e: k * v for e, v in w.items()})
    assert weighted_laplacian(c, {e: 1 for e in c.edges}) == harmonic_laplacian(c)


@given(connected_graphs())
def test_axioms_hold(c):
    check_axioms(c, harmonic_laplacian(c))


@given(small_rationals(), small_rationals(), small_rationals())
def test_box_axioms_and_normalizer(a, b, c):
    box, L = parallelepiped(a, b, c), parallelepiped_laplacian(a, b, c)
    check_axioms(box, L)
    assert all(jump_normalizer(box, L, x) == a + b + c for x in range(8))
    assert L[0, 1] == (b + c) / (2 * a)
    assert L[0, 3] == (c + a) / (2 * b)
    assert L[0, 4] == (a + b) / (2 * c)


def test_box_equal_sides():
    a = Fraction(3, 7)
    box, L = parallelepiped(a, a, a), parallelepiped_laplacian(a, a, a)
    assert all(L[0, y] == 1 for y in box.neighbors[0])
    assert jump_normalizer(box, L, 0) == 3 * a


def test_box_rejects_nonpositive():
    with pytest.raises(NonPositiveLength):
        parallelepiped_laplacian(1, 0, 1)


def test_axiom_violations():
    c = path_graph(3)
    bad = [
        {0: {0: Fraction(-1), 1: Fraction(1)}, 1: {1: Fraction(-1), 0: Fraction(1, 2), 2: Fraction(1, 2)},
         2: {2: Fraction(-1), 0: Fraction(1)}},  # non-edge entry
        {0: {0: Fraction(-1), 1: Fraction(1)}, 1: {1: Fraction(-1), 0: Fraction(1), 2: Fraction(0)},
         2: {2: Fraction(-1), 1: Fraction(1)}},  # zero on an edge
        {0: {0: Fraction(-1), 1: Fraction(2)}, 1: {1: Fraction(-1), 0: Fraction(1, 2), 2: Fraction(1, 2)},
         2: {2: Fraction(-1), 1: Fraction(1)}},  # row sum
    ]
    for rows in bad:
        with pytest.raises(InvalidLaplacian):
            check_axioms(c, Laplacian(rows))


def test_normalizer_unit_and_scaled(solids):
    c = solids["icosahedron"]
    L = harmonic_laplacian(c)
    assert jump_normalizer(c, L, 0) == 1
    lam = Fraction(5, 2)
    assert jump_normalizer(c.scaled(lam), harmonic_laplacian(c.scaled(lam)), 0) == lam
