import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import connected_graphs
from orcurv import degree, generic_star_pair, ollivier_ricci, parallelepiped, platonic, tiling_patch
from orcurv.errors import ParseError
from orcurv.formats import (
    EdgeRecord,
    Report,
    Summary,
    format_rational,
    parse_complex,
    parse_edge_list,
    parse_off,
    parse_rational,
    report_from_csv,
    report_from_json,
    report_to_csv,
    report_to_json,
    report_to_table,
    serialize_edge_list,
)
from orcurv.generators import PLATONIC

CUBE_OFF = """OFF
8 6 12
0 0 0
1 0 0
1 1 0
0 1 0
0 0 1
1 0 1
1 1 1
0 1 1
4 0 3 2 1
4 4 5 6 7
4 0 1 5 4
4 1 2 6 5
4 2 3 7 6
4 3 0 4 7
"""

TETRA_OFF = """OFF
# regular tetrahedron
4 4 6
1 1 1
1 -1 -1
-1 1 -1
-1 -1 1
3 0 1 2
3 0 3 1
3 0 2 3
3 1 3 2
"""


class TestRationals:
    @pytest.mark.parametrize("q, text", [(Fraction(3, 2), "3/2"), (Fraction(-2, 6), "-1/3"), (4, "4/1"), (0, "0/1")])
    def test_format(self, q, text):
        assert format_rational(q) == text

    @pytest.mark.parametrize("text, q", [("3/2", Fraction(3, 2)), ("0.125", Fraction(1, 8)), ("7", Fraction(7)), ("1e-3", Fraction(1, 1000))])
    def test_parse(self, text, q):
        assert parse_rational(text) == q

    @pytest.mark.parametrize("text", ["x", "1/0", ""])
    def test_parse_bad(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    @given(st.fractions(max_denominator=10**6))
    def test_round_trip(self, q):
        assert parse_rational(format_rational(q)) == q


class TestEdgeList:
    def test_path(self):
        c, labels = parse_edge_list("a b\nb c")
        assert c.n_vertices == 3 and labels == ["a", "b", "c"]
        assert degree(c, 1) == 2

    def test_length(self):
        c, _ = parse_edge_list("a b 3/2   # comment\n\n")
        assert c.length(0, 1) == Fraction(3, 2)
        c, _ = parse_edge_list("a b 0.25")
        assert c.length(0, 1) == Fraction(1, 4)

    @pytest.mark.parametrize("text, line, reason", [
        ("a a", 1, "loop"),
        ("a b\nb a", 2, "duplicate"),
        ("a b c d", 1, "expected"),
        ("a b -1", 1, "non-positive"),
        ("a b x", 1, "rational"),
        ("a b\n@bogus a", 2, "directive"),
        ("a b\n@face a b", 2, "3 vertices"),
    ])
    def test_errors(self, text, line, reason):
        with pytest.raises(ParseError) as err:
            parse_edge_list(text)
        assert err.value.line == line and reason in err.value.reason

    def test_face_without_edges(self):
        with pytest.raises(ParseError):
            parse_edge_list("a b\nb c\n@face a b c")

    @given(connected_graphs(max_n=9, lengths=True))
    def test_round_trip(self, c):
        text = serialize_edge_list(c)
        c2, labels = parse_edge_list(text)
        assert c2 == c
        assert labels == [str(i + 1) for i in range(c.n_vertices)]

    def test_custom_labels_round_trip(self):
        c = generic_star_pair(4, 5).complex
        labels = [f"v{i}" for i in range(c.n_vertices)]
        c2, l2 = parse_edge_list(serialize_edge_list(c, labels))
        assert c2 == c and l2 == labels

    @pytest.mark.parametrize("make", [
        *(lambda n=n: platonic(n) for n in PLATONIC),
        lambda: tiling_patch("snub_square", 4).complex,
        lambda: generic_star_pair(3, 8).complex,
        lambda: parallelepiped(Fraction(5, 2), 1, Fraction(1, 3)),
    ])
    def test_families_round_trip(self, make):
        c = make()
        c2, _ = parse_complex(serialize_edge_list(c))
        assert c2 == c
        for e in c.edges[:6]:
            assert ollivier_ricci(c2, *e).value == ollivier_ricci(c, *e).value


class TestOff:
    def test_cube(self):
        c, labels = parse_off(CUBE_OFF)
        cube = platonic("cube")
        assert (c.n_vertices, c.n_edges, len(c.faces)) == (8, 12, 6)
        assert sorted(degree(c, x) for x in range(8)) == [3] * 8
        assert labels[0] == "0"
        assert ollivier_ricci(c, *c.edges[0]).value == ollivier_ricci(cube, *cube.edges[0]).value

    def test_tetrahedron_unit(self):
        from orcurv import kappa_one
        from orcurv.curvature import forman_curvature

        c, _ = parse_off(TETRA_OFF)
        e = c.edges[2]
        assert ollivier_ricci(c, *e).value == Fraction(4, 3)
        assert kappa_one(c, *e).value == Fraction(2, 3)
        assert forman_curvature(c, *e) == 4

    def test_euclidean(self):
        c, _ = parse_off(CUBE_OFF, unit_lengths=False)
        assert c.unit_lengths
        tet, _ = parse_off(TETRA_OFF, unit_lengths=False)
        length = tet.length(0, 1)
        assert abs(float(length) - 8 ** 0.5) < 1e-30
        stretched, _ = parse_off(CUBE_OFF.replace("1 0 0\n", "3/2 0 0\n").replace("1 1 0\n", "3/2 1 0\n"), unit_lengths=False)
        assert stretched.length(0, 1) == Fraction(3, 2)

    def test_header_with_counts(self):
        text = CUBE_OFF.replace("OFF\n8 6 12", "OFF 8 6 12")
        assert parse_off(text)[0].n_edges == 12

    @pytest.mark.parametrize("text", [
        "8 6 12\n",
        "OFF\n8 x 12\n",
        "OFF\n9 6 12\n" + CUBE_OFF.split("\n", 2)[2],
        CUBE_OFF.replace("4 0 3 2 1", "4 0 3 2 9"),
        CUBE_OFF.replace("4 0 3 2 1", "2 0 3"),
        CUBE_OFF.replace("0 1 1\n", "0 1\n"),
    ])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_off(text)

    def test_sniffing(self):
        assert parse_complex(CUBE_OFF)[0].n_vertices == 8
        assert parse_complex("# hi\nx y\n")[0].n_vertices == 2


def sample_report():
    recs = [
        EdgeRecord("1", "2", 3, 3, Fraction(2, 3), Fraction(0), Fraction(-2, 3), 2, Fraction(2, 3), Fraction(1, 4), True),
        EdgeRecord("a", "b", 4, 5, Fraction(11, 20), None, Fraction(1, 5), None, None, Fraction(1, 8), False),
    ]
    return Report(recs, Summary(Fraction(2, 3), Fraction(3), Fraction(3), True))


class TestReports:
    def test_json_round_trip(self):
        r = sample_report()
        assert report_from_json(report_to_json(r)) == r

    def test_csv_round_trip(self):
        r = sample_report()
        assert report_from_csv(report_to_csv(r)) == r

    def test_csv_equals_json(self):
        r = sample_report()
        assert report_from_csv(report_to_csv(r)) == report_from_json(report_to_json(r))

    def test_rationals_as_strings(self):
        doc = json.loads(report_to_json(sample_report()))
        assert doc["edges"][0]["ric"] == "2/3"
        assert doc["edges"][0]["kappa_one"] == "0/1"
        assert doc["edges"][1]["kappa_one"] is None
        assert doc["summary"]["myers_bound"] == "3/1"

    def test_infinite_bound(self):
        import math

        r = Report([], Summary(Fraction(-1, 3), math.inf, Fraction(5), False))
        assert report_from_json(report_to_json(r)) == r
        assert report_from_csv(report_to_csv(r)) == r
        assert "myers_bound=inf" in report_to_table(r)

    def test_table(self):
        text = report_to_table(sample_report())
        assert "11/20" in text and "FAIL" in text and "sharp=true" in text
        grouped = report_to_table(Report(sample_report().edges * 3), group=True)
        assert "3x (1-2)" in grouped
