from fractions import Fraction

import pytest

from orcurv import (
    degree,
    generic_star_pair,
    ollivier_ricci,
    parallelepiped,
    platonic,
    shortest_distances,
    tiling_patch,
)
from orcurv.complex import all_pairs_distances, boundary_vertices
from orcurv.errors import DegreeTooSmall, NonPositiveLength, RadiusTooSmall, UnknownName
from orcurv.generators import TILINGS


@pytest.mark.parametrize("name, counts, degrees, face_size", [
    ("tetrahedron", (4, 6, 4), {3}, 3),
    ("cube", (8, 12, 6), {3}, 4),
    ("octahedron", (6, 12, 8), {4}, 3),
    ("dodecahedron", (20, 30, 12), {3}, 5),
    ("icosahedron", (12, 30, 20), {5}, 3),
])
def test_platonic(solids, name, counts, degrees, face_size):
    c = solids[name]
    assert (c.n_vertices, c.n_edges, len(c.faces)) == counts
    assert {degree(c, x) for x in range(c.n_vertices)} == degrees
    assert {len(f) for f in c.faces} == {face_size}
    assert c.unit_lengths
    assert all(len(c.faces_on_edge(*e)) == 2 for e in c.edges)


def test_platonic_unknown():
    with pytest.raises(UnknownName):
        platonic("hypercube")


@pytest.mark.parametrize("kind, types, degrees", [
    ("triangular", {"triangle-triangle"}, {(6, 6)}),
    ("square", {"square-square"}, {(4, 4)}),
    ("hexagonal", {"hexagon-hexagon"}, {(3, 3)}),
    ("snub_square", {"triangle-triangle", "triangle-square"}, {(5, 5)}),
    ("trihexagonal", {"triangle-hexagon"}, {(4, 4)}),
])
def test_tiling_probes(patches, kind, types, degrees):
    p = patches[kind]
    c = p.complex
    assert set(p.probes) == types
    assert {(degree(c, u), degree(c, v)) for u, v in p.probes.values()} == degrees
    bnd = sorted(boundary_vertices(c))
    for u, v in p.probes.values():
        dm = shortest_distances(c, [u, v], bnd)
        assert min(min(r) for r in dm.values) >= p.radius


def test_tiling_errors():
    with pytest.raises(RadiusTooSmall):
        tiling_patch("square", 3)
    with pytest.raises(UnknownName):
        tiling_patch("penrose", 4)


@pytest.mark.parametrize("kind", TILINGS)
def test_radius_independence(patches, kind):
    small, big = patches[kind], tiling_patch(kind, 8)
    assert set(small.probes) == set(big.probes)
    for name in small.probes:
        a = ollivier_ricci(small.complex, *small.probes[name]).value
        b = ollivier_ricci(big.complex, *big.probes[name]).value
        assert a == b


class TestStarPair:
    @pytest.mark.parametrize("d, d2", [(3, 3), (3, 7), (4, 6), (6, 6), (9, 5)])
    def test_shape(self, d, d2):
        sp = generic_star_pair(d, d2)
        c = sp.complex
        assert c.n_vertices == d + d2 - 2
        assert sp.edge == (0, 1) and sp.degrees == (d, d2)
        assert (degree(c, 0), degree(c, 1)) == (d, d2)
        assert set(c.neighbors[0]) & set(c.neighbors[1]) == {2, 3}
        assert all(len(f) == 3 for f in c.faces)
        assert len(c.faces_on_edge(0, 1)) == 2

    def test_three_three_shared_distance(self):
        c = generic_star_pair(3, 3).complex
        assert shortest_distances(c, [2], [3])[2, 3] == 2

    def test_fans_are_chained(self):
        c = generic_star_pair(6, 5).complex
        # x's exclusive neighbours 4, 5, 6 run from shared 2 to shared 3
        assert c.has_edge(2, 4) and c.has_edge(4, 5) and c.has_edge(5, 6) and c.has_edge(6, 3)
        assert c.has_edge(3, 7) and c.has_edge(7, 8) and c.has_edge(8, 2)
        assert not c.has_edge(2, 3)

    def test_too_small(self):
        with pytest.raises(DegreeTooSmall):
            generic_star_pair(2, 5)


class TestBox:
    def test_unit_box_is_cube(self, solids):
        box = parallelepiped(1, 1, 1)
        assert sorted(sorted(r) for r in all_pairs_distances(box).values) == sorted(
            sorted(r) for r in all_pairs_distances(solids["cube"]).values
        )
        assert len(box.faces) == 6 and all(len(f) == 4 for f in box.faces)

    def test_distance_matrix(self):
        a, b, c = Fraction(7, 3), Fraction(1, 2), Fraction(5)
        box = parallelepiped(a, b, c)
        expected = [
            [0, a, a + b, b, c, c + a],
            [a, 0, b, a + b, c + a, c],
            [a + b, b, 0, a, a + b + c, b + c],
            [b, a + b, a, 0, b + c, a + b + c],
            [c, c + a, a + b + c, b + c, 0, a],
            [c + a, c, b + c, a + b + c, a, 0],
        ]
        dm = shortest_distances(box, range(6), range(6))
        assert [[dm[i, j] for j in range(6)] for i in range(6)] == expected
        assert shortest_distances(box, [0], [6])[0, 6] == a + b + c
        assert (box.length(0, 1), box.length(0, 3), box.length(0, 4)) == (a, b, c)

    def test_nonpositive(self):
        with pytest.raises(NonPositiveLength):
            parallelepiped(1, -1, 1)
