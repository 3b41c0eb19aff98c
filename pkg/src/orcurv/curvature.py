"""Coarse Ricci curvature of edges and the comparison quantities around it."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .complex import Complex2, as_fraction, degree, edge_key, shortest_distances, triangles_on_edge
from .errors import (
    AngleOutOfRange,
    DegreeTooSmall,
    ExcludedDegrees,
    FacesMissing,
    NotAGeodesic,
    NotAnEdge,
    NotInLinearRegime,
    SameVertex,
)
from .laplacian import Laplacian, jump_normalizer
from .measures import Measure, check_time, laplacian_walk, lazy_walk
from .transport import TransportInstance, TransportSolution, transport_between

DEFAULT_T0 = Fraction(1, 4)


@dataclass(frozen=True)
class WalkSpec:
    """Which random walk feeds the transport problem.

    ``uniform_lazy`` keeps ``1 - t`` at the centre and spreads ``t`` evenly;
    ``laplacian_normalized`` follows ``laplacian`` rescaled so the expected
    jump length is ``t``.
    """

    kind: str = "uniform_lazy"
    laplacian: Laplacian | None = None

    def __post_init__(self):
        if self.kind not in ("uniform_lazy", "laplacian_normalized"):
            raise ValueError(f"unknown walk kind {self.kind!r}")
        if (self.kind == "laplacian_normalized") != (self.laplacian is not None):
            raise ValueError("a Laplacian is required exactly for the laplacian_normalized walk")

    def measure(self, c: Complex2, x: int, t) -> Measure:
        if self.laplacian is None:
            return lazy_walk(c, x, t)
        return laplacian_walk(c, self.laplacian, x, t)

    def centre_rate(self, c: Complex2, x: int) -> Fraction:
        """Rate at which the centre loses mass: ``1 - mu_x^t(x) = rate * t``."""
        if self.laplacian is None:
            return Fraction(1)
        return -self.laplacian[x, x] / jump_normalizer(c, self.laplacian, x)


UNIFORM = WalkSpec()


def laplacian_walk_spec(L: Laplacian) -> WalkSpec:
    return WalkSpec("laplacian_normalized", L)


@dataclass(frozen=True)
class CurvatureResult:
    edge: tuple[int, int]
    kind: str
    value: Fraction
    t_used: Fraction | None
    solution: TransportSolution
    instance: TransportInstance


def kappa_t(c: Complex2, x: int, x2: int, t, walk: WalkSpec = UNIFORM) -> CurvatureResult:
    """``1 - W1(mu_x^t, mu_x2^t) / d(x, x2)``, exact."""
    if x == x2:
        raise SameVertex(f"curvature needs two distinct vertices, got {x} twice")
    t = check_time(t)
    mu, nu = walk.measure(c, x, t), walk.measure(c, x2, t)
    inst, sol = transport_between(c, mu, nu)
    dist = shortest_distances(c, [x], [x2])[x, x2]
    return CurvatureResult((x, x2), "kappa_t", 1 - sol.cost_value / dist, t, sol, inst)


def kappa_one(c: Complex2, x: int, x2: int, walk: WalkSpec = UNIFORM) -> CurvatureResult:
    res = kappa_t(c, x, x2, 1, walk)
    return CurvatureResult(res.edge, "kappa_one", res.value, res.t_used, res.solution, res.instance)


def linear_regime_t0(c: Complex2, x: int, x2: int, walk: WalkSpec = UNIFORM) -> Fraction:
    """``min(1/4, 1/(2C))`` with ``C`` the larger centre rate of the two endpoints.

    Below ``1/(2C)`` the transport polytopes at different times are
    homothetic about the Dirac coupling, so ``kappa_t / t`` is constant.
    """
    rate = max(walk.centre_rate(c, x), walk.centre_rate(c, x2))
    return min(DEFAULT_T0, 1 / (2 * rate))


def ollivier_ricci(
    c: Complex2, x: int, x2: int, walk: WalkSpec = UNIFORM, t0=None
) -> CurvatureResult:
    """Asymptotic curvature ``lim kappa_t / t`` computed as ``kappa_t0 / t0``.

    The quotient is recomputed at ``t0 / 2``; if the two differ ``t0`` was
    not small enough and :class:`NotInLinearRegime` is raised.
    """
    t0 = linear_regime_t0(c, x, x2, walk) if t0 is None else as_fraction(t0)
    if t0 <= 0:
        raise ValueError("t0 must be positive")
    full = kappa_t(c, x, x2, t0, walk)
    half = kappa_t(c, x, x2, t0 / 2, walk)
    ric = full.value / t0
    if half.value / (t0 / 2) != ric:
        raise NotInLinearRegime(
            f"kappa_t/t is {ric} at t={t0} but {half.value / (t0 / 2)} at t={t0 / 2}; pass a smaller t0"
        )
    return CurvatureResult(full.edge, "ric", ric, t0, full.solution, full.instance)


_TABLE_SPECIAL = {
    (3, 3): Fraction(4, 3),
    (4, 4): Fraction(3, 4),
    (4, 5): Fraction(11, 20),
    (4, 6): Fraction(1, 3),
    (5, 5): Fraction(2, 5),
    (5, 6): Fraction(2, 15),
}
_TABLE_EXCLUDED = {(3, 4), (3, 5)}


def degree_table_ric(d: int, d2: int) -> Fraction:
    """Closed-form ``ric`` of an interior edge of a generic triangulation.

    Six small degree pairs are tabulated; otherwise ``4/d + 8/d' - 2`` with
    ``d <= d'``.  ``(3, 4)`` and ``(3, 5)`` have no generic realisation and
    raise :class:`ExcludedDegrees`.
    """
    d, d2 = sorted((int(d), int(d2)))
    if d < 3:
        raise DegreeTooSmall(f"degrees must be at least 3, got ({d}, {d2})")
    if (d, d2) in _TABLE_EXCLUDED:
        raise ExcludedDegrees(f"degree pair ({d}, {d2}) has no generic configuration")
    if (d, d2) in _TABLE_SPECIAL:
        return _TABLE_SPECIAL[d, d2]
    return Fraction(4, d) + Fraction(8, d2) - 2


def jost_liu_bound(c: Complex2, x: int, x2: int) -> Fraction:
    """Jost-Liu lower bound on ``kappa_one`` from degrees and shared triangles."""
    tri = triangles_on_edge(c, x, x2)
    d, d2 = sorted((degree(c, x), degree(c, x2)))
    base = 1 - Fraction(1, d) - Fraction(1, d2)
    return Fraction(tri, d2) - max(base - Fraction(tri, d), 0) - max(base - Fraction(tri, d2), 0)


def forman_curvature(c: Complex2, x: int, x2: int) -> int:
    """Unit-weight Forman curvature: ``#faces(e) + 2 - #parallel(e)``.

    ``e'`` is parallel to ``e`` when they share a vertex but no face, or a
    face but no vertex.
    """
    if c.faces is None:
        raise FacesMissing("Forman curvature needs the faces of the complex")
    if not c.has_edge(x, x2):
        raise NotAnEdge(f"({x}, {x2}) is not an edge")
    e = edge_key(x, x2)
    faces_e = set(c.faces_on_edge(*e))
    parallel = set()
    for v in e:
        for w in c.neighbors[v]:
            other = edge_key(v, w)
            if other != e and not faces_e & set(c.faces_on_edge(*other)):
                parallel.add(other)
    for f in faces_e:
        for i in range(len(f)):
            other = edge_key(f[i], f[(i + 1) % len(f)])
            if x not in other and x2 not in other:
                parallel.add(other)
    return len(faces_e) + 2 - len(parallel)


def _edge_ric(args):
    c, e, walk, t0 = args
    return ollivier_ricci(c, e[0], e[1], walk, t0)


def ric_on_edges(
    c: Complex2,
    edges: Sequence[tuple[int, int]] | None = None,
    walk: WalkSpec = UNIFORM,
    t0=None,
    jobs: int = 1,
) -> list[CurvatureResult]:
    """Curvature on many edges, in the order given (all edges by default)."""
    edges = list(c.edges if edges is None else edges)
    work = [(c, e, walk, t0) for e in edges]
    if jobs <= 1 or len(edges) < 2:
        return [_edge_ric(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_edge_ric, work))


@dataclass(frozen=True)
class MyersReport:
    rho: Fraction
    bound: Fraction | float
    diameter: Fraction
    holds: bool
    sharp: bool


def myers_check(c: Complex2, walk: WalkSpec = UNIFORM, *, ric_values: Sequence[Fraction] | None = None) -> MyersReport:
    """Compare the diameter with ``2 / rho``, ``rho`` the minimum edge curvature.

    ``bound`` is ``math.inf`` when ``rho <= 0``.
    """
    if ric_values is None:
        ric_values = [r.value for r in ric_on_edges(c, walk=walk)]
    rho = min(ric_values)
    dm = shortest_distances(c, range(c.n_vertices), range(c.n_vertices))
    diam = max(v for row in dm.values for v in row)
    if rho <= 0:
        return MyersReport(rho, math.inf, diam, True, False)
    bound = 2 / rho
    return MyersReport(rho, bound, diam, diam <= bound, diam == bound)


def concavity_check(c: Complex2, walk: WalkSpec, t, path: Sequence[int]) -> bool:
    """``kappa_t(x_0, x_n) d(x_0, x_n) >= sum_i d(x_{i-1}, x_i) kappa_t(x_{i-1}, x_i)`` along a geodesic."""
    path = list(path)
    if len(path) < 2:
        raise NotAGeodesic("a path needs at least two vertices")
    dm = shortest_distances(c, path, path)
    steps = [dm[a, b] for a, b in zip(path, path[1:])]
    total = dm[path[0], path[-1]]
    if any(s == 0 for s in steps) or sum(steps) != total:
        raise NotAGeodesic(f"path {path} is not a geodesic")
    lhs = kappa_t(c, path[0], path[-1], t, walk).value * total
    rhs = sum(
        (s * kappa_t(c, a, b, t, walk).value for s, (a, b) in zip(steps, zip(path, path[1:]))),
        Fraction(0),
    )
    return lhs >= rhs


def cone_curvature(alpha: float, alpha2: float) -> float:
    """Curvature between two cone points with angle defects ``alpha``, ``alpha2`` (radians).

    Floating point; comparison use only.
    """
    for a in (alpha, alpha2):
        if not 0 <= a < 2 * math.pi:
            raise AngleOutOfRange(f"angle defect {a} outside [0, 2 pi)")
    return 4 / 3 * (
        math.sin(alpha2 / 2) / (2 * math.pi - alpha2) + math.sin(alpha / 2) / (2 * math.pi - alpha)
    )
