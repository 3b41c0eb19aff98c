import itertools
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from orcurv import build_complex, generic_star_pair, platonic, tiling_patch
from orcurv.generators import PLATONIC, TILINGS

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def F(s):
    return Fraction(s)


@st.composite
def connected_graphs(draw, min_n=2, max_n=8, lengths=False):
    """Random spanning tree plus extra edges; optionally rational lengths."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n))
    edges |= {(min(a, b), max(a, b)) for a, b in extra if a != b}
    edges = sorted(edges)
    if lengths:
        ls = draw(st.lists(
            st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=6),
            min_size=len(edges), max_size=len(edges),
        ))
        return build_complex(n, [(u, v, w) for (u, v), w in zip(edges, ls)])
    return build_complex(n, edges)


@st.composite
def small_rationals(draw, lo=Fraction(1, 8), hi=Fraction(4), max_den=8):
    return draw(st.fractions(min_value=lo, max_value=hi, max_denominator=max_den))


@pytest.fixture(scope="session")
def solids():
    return {name: platonic(name) for name in PLATONIC}


@pytest.fixture(scope="session")
def patches():
    return {kind: tiling_patch(kind, 4) for kind in TILINGS}


@pytest.fixture(scope="session")
def star_pairs():
    pairs = [(3, 3), (4, 4), (4, 5), (4, 6), (5, 5), (5, 6), (6, 7), (3, 8)]
    return {p: generic_star_pair(*p) for p in pairs}


def path_graph(n):
    return build_complex(n, [(i, i + 1) for i in range(n - 1)])


def all_pairs(n):
    return list(itertools.combinations(range(n), 2))


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
