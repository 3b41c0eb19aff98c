"""Built-in complexes: Platonic solids, tiling patches, star pairs, boxes."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .complex import Complex2, as_fraction, boundary_vertices, build_complex, edge_key, shortest_distances
from .errors import DegreeTooSmall, NonPositiveLength, RadiusTooSmall, UnknownName

PLATONIC = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")
TILINGS = ("triangular", "square", "hexagonal", "snub_square", "trihexagonal")
MIN_RADIUS = 4

_FACE_NAMES = {3: "triangle", 4: "square", 6: "hexagon"}


def _triangles(n: int, edges) -> list[tuple[int, int, int]]:
    es = {edge_key(u, v) for u, v in edges}
    return [
        (a, b, c)
        for a, b, c in itertools.combinations(range(n), 3)
        if {(a, b), (a, c), (b, c)} <= es
    ]


def _dual(n: int, faces) -> tuple[int, list[tuple[int, int]], list[tuple[int, ...]]]:
    # vertices <- faces, edges <- face pairs sharing an edge, faces <- cyclic fans around vertices
    def fedges(f):
        return {edge_key(f[i], f[(i + 1) % len(f)]) for i in range(len(f))}

    fe = [fedges(f) for f in faces]
    edges = [(i, j) for i, j in itertools.combinations(range(len(faces)), 2) if fe[i] & fe[j]]
    dual_faces = []
    for v in range(n):
        around = [k for k, f in enumerate(faces) if v in f]
        cycle = [around[0]]
        while len(cycle) < len(around):
            last = cycle[-1]
            nxt = next(
                k for k in around
                if k not in cycle and any(v in e for e in fe[last] & fe[k])
            )
            cycle.append(nxt)
        dual_faces.append(tuple(cycle))
    return len(faces), edges, dual_faces


def platonic(name: str) -> Complex2:
    """One of the five Platonic solids with unit edges and all faces."""
    if name == "tetrahedron":
        edges = list(itertools.combinations(range(4), 2))
        return build_complex(4, edges, _triangles(4, edges))
    if name == "octahedron":
        antipodes = {(0, 1), (2, 3), (4, 5)}
        edges = [e for e in itertools.combinations(range(6), 2) if e not in antipodes]
        return build_complex(6, edges, _triangles(6, edges))
    if name == "cube":
        edges = [(u, v) for u, v in itertools.combinations(range(8), 2) if bin(u ^ v).count("1") == 1]
        faces = []
        for bit in (1, 2, 4):
            others = [b for b in (1, 2, 4) if b != bit]
            for side in (0, bit):
                p, q = others
                faces.append((side, side | p, side | p | q, side | q))
        return build_complex(8, edges, faces)
    if name in ("icosahedron", "dodecahedron"):
        phi = (1 + math.sqrt(5)) / 2
        pts = []
        for a, b in itertools.product((-1, 1), repeat=2):
            pts += [(0, a, b * phi), (a, b * phi, 0), (b * phi, 0, a)]
        pts = np.array(pts)
        dist = np.linalg.norm(pts[:, None] - pts[None], axis=2)
        edges = [(i, j) for i, j in itertools.combinations(range(12), 2) if abs(dist[i, j] - 2) < 1e-9]
        faces = _triangles(12, edges)
        if name == "icosahedron":
            return build_complex(12, edges, faces)
        n, dedges, dfaces = _dual(12, faces)
        return build_complex(n, dedges, dfaces)
    raise UnknownName(f"unknown solid {name!r}; expected one of {', '.join(PLATONIC)}")


@dataclass(frozen=True)
class TilingPatch:
    """Finite tiling patch plus interior probe edges grouped by edge type."""

    complex: Complex2
    kind: str
    radius: int
    probes: dict[str, tuple[int, int]] = field(default_factory=dict)
    coords: np.ndarray | None = field(default=None, compare=False, repr=False)


def _tiling_cell(kind: str):
    s3 = math.sqrt(3)
    if kind == "square":
        return np.array([[1, 0], [0, 1]]), [(0.0, 0.0)]
    if kind == "triangular":
        return np.array([[1, 0], [0.5, s3 / 2]]), [(0.0, 0.0)]
    if kind == "hexagonal":
        return np.array([[s3, 0], [s3 / 2, 1.5]]), [(0.0, 0.0), (0.0, 1.0)]
    if kind == "trihexagonal":
        return np.array([[2, 0], [1, s3]]), [(0.0, 0.0), (1.0, 0.0), (0.5, s3 / 2)]
    if kind == "snub_square":
        # unit squares rotated by 15 degrees on a square lattice of side sqrt(2 + sqrt 3)
        th = math.radians(15)
        rot = np.array([[math.cos(th), -math.sin(th)], [math.sin(th), math.cos(th)]])
        corners = [rot @ np.array(p) for p in ((0.5, 0.5), (-0.5, 0.5), (-0.5, -0.5), (0.5, -0.5))]
        side = math.sqrt(2 + s3)
        return np.array([[side, 0], [0, side]]), [tuple(p) for p in corners]
    raise UnknownName(f"unknown tiling {kind!r}; expected one of {', '.join(TILINGS)}")


def _planar_faces(pts: np.ndarray, nbrs: list[list[int]]) -> list[tuple[int, ...]]:
    # trace bounded faces of a straight-line plane graph; keep small counterclockwise ones
    order = []
    for v, ns in enumerate(nbrs):
        ang = [math.atan2(*(pts[w] - pts[v])[::-1]) for w in ns]
        order.append([w for _, w in sorted(zip(ang, ns))])
    pos = [{w: k for k, w in enumerate(o)} for o in order]
    seen = set()
    faces = []
    for u in range(len(pts)):
        for v in order[u]:
            if (u, v) in seen:
                continue
            cycle = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                cycle.append(a)
                k = pos[b][a]
                a, b = b, order[b][(k - 1) % len(order[b])]
            if len(cycle) > 6:
                continue
            poly = pts[cycle]
            area = 0.5 * sum(
                poly[i, 0] * poly[(i + 1) % len(poly), 1] - poly[(i + 1) % len(poly), 0] * poly[i, 1]
                for i in range(len(poly))
            )
            if area > 1e-9:
                faces.append(tuple(cycle))
    return faces


def _build_patch(kind: str, extent: int):
    basis, motif = _tiling_cell(kind)
    raw = []
    for i in range(-extent, extent + 1):
        for j in range(-extent, extent + 1):
            for p in motif:
                raw.append(np.array(p) + i * basis[0] + j * basis[1])
    raw = np.array(raw)
    # round-disc cut keeps the patch convex
    rmax = extent * min(np.linalg.norm(basis[0]), np.linalg.norm(basis[1]))
    raw = raw[np.linalg.norm(raw, axis=1) <= rmax + 1e-9]
    _, first = np.unique(np.round(raw, 6), axis=0, return_index=True)
    pts = raw[np.sort(first)]
    n = len(pts)
    dist = np.linalg.norm(pts[:, None] - pts[None], axis=2)
    ii, jj = np.nonzero(np.triu(np.abs(dist - 1) < 1e-6, 1))
    edges = list(zip(ii.tolist(), jj.tolist()))
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    faces = _planar_faces(pts, nbrs)
    return build_complex(n, edges, faces), pts


def _edge_type(c: Complex2, u: int, v: int) -> str:
    sizes = sorted(len(f) for f in c.faces_on_edge(u, v))
    return "-".join(_FACE_NAMES.get(s, f"{s}gon") for s in sizes)


def tiling_patch(kind: str, radius: int = MIN_RADIUS) -> TilingPatch:
    """Disc-shaped patch of a regular or semiregular tiling with unit edges.

    One probe edge per edge type (named by its two incident faces, e.g.
    ``"triangle-square"``), chosen nearest the centre among the edges whose
    endpoints are at hop distance at least ``radius`` from the boundary.
    """
    if radius < MIN_RADIUS:
        raise RadiusTooSmall(f"radius must be at least {MIN_RADIUS}, got {radius}")
    _tiling_cell(kind)

    extent = radius + 2
    while True:
        c, pts = _build_patch(kind, extent)
        bnd = sorted(boundary_vertices(c))
        hops = shortest_distances(c, bnd, range(c.n_vertices)).values
        depth = [min(row[v] for row in hops) for v in range(c.n_vertices)]
        types = {_edge_type(c, u, v) for u, v in c.edges if min(depth[u], depth[v]) >= 1}
        probes: dict[str, tuple[int, int]] = {}
        for u, v in sorted(c.edges, key=lambda e: (np.linalg.norm(pts[e[0]] + pts[e[1]]), e)):
            if min(depth[u], depth[v]) < radius:
                continue
            probes.setdefault(_edge_type(c, u, v), (u, v))
        if probes and set(probes) == types:
            return TilingPatch(c, kind, radius, dict(sorted(probes.items())), pts)
        extent += 2


@dataclass(frozen=True)
class StarPair:
    complex: Complex2
    edge: tuple[int, int]
    degrees: tuple[int, int]


def generic_star_pair(d: int, d2: int) -> StarPair:
    """Union of two adjacent vertex stars of degrees ``d`` and ``d2``.

    Vertex ``k`` of the usual 1-based numbering is id ``k - 1``: ``x = 0``,
    ``x' = 1``, shared neighbours 2 and 3, exclusive neighbours of ``x`` at
    ids ``4 .. d``, those of ``x'`` at ``d + 1 .. d + d2 - 3``.  Each fan of
    exclusive neighbours is chained from one shared neighbour to the other;
    with no exclusive neighbours the shared ones are not joined.
    """
    if d < 3 or d2 < 3:
        raise DegreeTooSmall(f"degrees must be at least 3, got ({d}, {d2})")
    x, x2, s3, s4 = 0, 1, 2, 3
    n = d + d2 - 2
    ex = list(range(4, d + 1))
    ex2 = list(range(d + 1, n))
    edges = {(x, x2), (x, s3), (x, s4), (x2, s3), (x2, s4)}
    faces = [(x, x2, s3), (x, x2, s4)]
    if ex:
        chain = [s3] + ex + [s4]
        edges.update((x, y) for y in ex)
        edges.update(edge_key(a, b) for a, b in zip(chain, chain[1:]))
        faces += [(x, a, b) for a, b in zip(chain, chain[1:])]
    if ex2:
        chain = [s4] + ex2 + [s3]
        edges.update((x2, y) for y in ex2)
        edges.update(edge_key(a, b) for a, b in zip(chain, chain[1:]))
        faces += [(x2, a, b) for a, b in zip(chain, chain[1:])]
    return StarPair(build_complex(n, sorted(edges), faces), (x, x2), (d, d2))


# 1-based box labels: |e12| = a, |e14| = b, |e15| = c
_BOX_COORDS = {
    1: (0, 0, 0), 2: (1, 0, 0), 3: (1, 1, 0), 4: (0, 1, 0),
    5: (0, 0, 1), 6: (1, 0, 1), 7: (1, 1, 1), 8: (0, 1, 1),
}


def parallelepiped(a, b, c) -> Complex2:
    """Rectangular box with edge lengths ``a`` (x axis), ``b`` (y), ``c`` (z).

    Vertex ``k`` of the 1-based box labelling is id ``k - 1``.
    """
    a, b, c = (as_fraction(v) for v in (a, b, c))
    if min(a, b, c) <= 0:
        raise NonPositiveLength("box edge lengths must be positive")
    axis_len = (a, b, c)
    edges = []
    for p, q in itertools.combinations(range(1, 9), 2):
        diff = [abs(s - t) for s, t in zip(_BOX_COORDS[p], _BOX_COORDS[q])]
        if sum(diff) == 1:
            edges.append((p - 1, q - 1, axis_len[diff.index(1)]))
    faces = []
    for axis in range(3):
        for side in (0, 1):
            quad = [k for k, xyz in _BOX_COORDS.items() if xyz[axis] == side]
            start = quad[0]
            cycle = [start]
            while len(cycle) < 4:
                last = _BOX_COORDS[cycle[-1]]
                cycle.append(next(
                    k for k in quad
                    if k not in cycle and sum(abs(s - t) for s, t in zip(last, _BOX_COORDS[k])) == 1
                ))
            faces.append(tuple(k - 1 for k in cycle))
    return build_complex(8, edges, faces)
