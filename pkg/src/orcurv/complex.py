"""Graphs and polyhedral 2-complexes with exact rational edge lengths."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import (
    DuplicateEdge,
    FaceUsesMissingEdge,
    IndexOutOfRange,
    LoopEdge,
    NonPositiveLength,
    NotAnEdge,
    SameVertex,
    Unreachable,
)

Edge = tuple[int, int]


def as_fraction(value) -> Fraction:
    """Exact conversion; strings like ``"3/2"`` or ``"0.1"`` are parsed literally."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a Fraction, int or decimal string")
    return Fraction(value)


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Complex2:
    """Finite simple graph with optional faces.

    ``edges`` is sorted, each pair stored as ``(min, max)``; ``lengths`` is
    aligned with ``edges``.  Build through :func:`build_complex`, which
    validates everything.
    """

    n_vertices: int
    edges: tuple[Edge, ...]
    lengths: tuple[Fraction, ...]
    faces: tuple[tuple[int, ...], ...] | None = None

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: k for k, e in enumerate(self.edges)}

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.neighbors)

    @cached_property
    def unit_lengths(self) -> bool:
        return all(length == 1 for length in self.lengths)

    @cached_property
    def _csr(self):
        indptr = np.zeros(self.n_vertices + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(a) for a in self.neighbors])
        indices = np.fromiter(
            (w for a in self.neighbors for w in a), dtype=np.int64, count=int(indptr[-1])
        )
        return indptr, indices

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edge_index

    def length(self, u: int, v: int) -> Fraction:
        try:
            return self.lengths[self.edge_index[edge_key(u, v)]]
        except KeyError:
            raise NotAnEdge(f"({u}, {v}) is not an edge") from None

    def check_vertex(self, x: int) -> None:
        if not 0 <= x < self.n_vertices:
            raise IndexOutOfRange(f"vertex {x} not in 0..{self.n_vertices - 1}")

    @cached_property
    def edge_faces(self) -> dict[Edge, tuple[tuple[int, ...], ...]]:
        table: dict[Edge, list[tuple[int, ...]]] = {e: [] for e in self.edges}
        for f in self.faces or ():
            for e in _face_edges(f):
                table[e].append(f)
        return {e: tuple(fs) for e, fs in table.items()}

    def faces_on_edge(self, u: int, v: int) -> tuple[tuple[int, ...], ...]:
        return self.edge_faces.get(edge_key(u, v), ())

    def scaled(self, factor) -> "Complex2":
        factor = as_fraction(factor)
        if factor <= 0:
            raise NonPositiveLength("scale factor must be positive")
        return Complex2(self.n_vertices, self.edges, tuple(l * factor for l in self.lengths), self.faces)


def _face_edges(face: Sequence[int]) -> set[Edge]:
    return {edge_key(face[i], face[(i + 1) % len(face)]) for i in range(len(face))}


def build_complex(
    n: int,
    edges: Iterable[Sequence],
    faces: Iterable[Sequence[int]] | None = None,
) -> Complex2:
    """Validate and freeze a complex.

    ``edges`` holds ``(u, v)`` or ``(u, v, length)`` items; a missing length
    means 1.  Faces are vertex cycles whose consecutive pairs must be edges.
    """
    if n < 0:
        raise IndexOutOfRange("vertex count must be nonnegative")
    table: dict[Edge, Fraction] = {}
    for item in edges:
        if len(item) == 2:
            u, v = item
            length = Fraction(1)
        elif len(item) == 3:
            u, v, length = item
            length = Fraction(1) if length is None else as_fraction(length)
        else:
            raise ValueError(f"edge must be (u, v) or (u, v, length), got {item!r}")
        u, v = int(u), int(v)
        for w in (u, v):
            if not 0 <= w < n:
                raise IndexOutOfRange(f"vertex {w} not in 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        key = edge_key(u, v)
        if key in table:
            raise DuplicateEdge(f"duplicate edge {key}")
        if length <= 0:
            raise NonPositiveLength(f"edge {key} has length {length}")
        table[key] = length

    face_tuple = None
    if faces is not None:
        face_list = []
        for f in faces:
            f = tuple(int(w) for w in f)
            if len(f) < 3:
                raise FaceUsesMissingEdge(f"face {f} has fewer than 3 vertices")
            for w in f:
                if not 0 <= w < n:
                    raise IndexOutOfRange(f"vertex {w} not in 0..{n - 1}")
            missing = _face_edges(f) - table.keys()
            if missing:
                raise FaceUsesMissingEdge(f"face {f} uses missing edges {sorted(missing)}")
            face_list.append(f)
        face_tuple = tuple(face_list)

    keys = tuple(sorted(table))
    return Complex2(n, keys, tuple(table[k] for k in keys), face_tuple)


def degree(c: Complex2, x: int) -> int:
    c.check_vertex(x)
    return len(c.neighbors[x])


def sphere(c: Complex2, x: int) -> tuple[int, ...]:
    """Neighbours of ``x`` (the 1-ring), sorted."""
    c.check_vertex(x)
    return c.neighbors[x]


def ball(c: Complex2, x: int) -> tuple[int, ...]:
    """``x`` followed by its sorted neighbours."""
    c.check_vertex(x)
    return (x,) + c.neighbors[x]


@dataclass(frozen=True)
class DistanceMatrix:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    values: tuple[tuple[Fraction, ...], ...]

    def __getitem__(self, pair: tuple[int, int]) -> Fraction:
        y, z = pair
        return self.values[self._row_pos[y]][self._col_pos[z]]

    @cached_property
    def _row_pos(self) -> dict[int, int]:
        return {y: k for k, y in enumerate(self.rows)}

    @cached_property
    def _col_pos(self) -> dict[int, int]:
        return {y: k for k, y in enumerate(self.cols)}

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "DistanceMatrix":
        return DistanceMatrix(
            tuple(rows), tuple(cols), tuple(tuple(self[y, z] for z in cols) for y in rows)
        )

    def transpose(self) -> "DistanceMatrix":
        return DistanceMatrix(self.cols, self.rows, tuple(zip(*self.values)) if self.values else ())


def _distance_rows(c: Complex2, sources: Sequence[int], use_jit: bool | None = None) -> list[list[Fraction]]:
    indptr, indices = c._csr
    if c.unit_lengths:
        hops = kernels.run_bfs(indptr, indices, sources, use_jit=use_jit)
        return [[Fraction(int(h)) if h >= 0 else None for h in row] for row in hops]
    # scale rational lengths to integers by the lcm of their denominators
    scale = math.lcm(*(l.denominator for l in c.lengths))
    per_edge = [int(l * scale) for l in c.lengths]
    weights = [per_edge[c.edge_index[edge_key(v, int(w))]] for v in range(c.n_vertices) for w in c.neighbors[v]]
    raw = kernels.run_dijkstra(indptr, indices, weights, sources, use_jit=use_jit)
    return [[Fraction(int(h), scale) if h >= 0 else None for h in row] for row in raw]


def shortest_distances(
    c: Complex2,
    sources: Sequence[int],
    targets: Sequence[int],
    *,
    use_jit: bool | None = None,
) -> DistanceMatrix:
    """Exact shortest-path distances between ``sources`` and ``targets``.

    Unit-length complexes use a hop BFS; otherwise integer Dijkstra after
    scaling the lengths by the lcm of their denominators.  Raises
    :class:`Unreachable` for any disconnected pair.
    """
    sources = tuple(int(s) for s in sources)
    targets = tuple(int(t) for t in targets)
    for w in sources + targets:
        c.check_vertex(w)
    if not sources:
        return DistanceMatrix((), targets, ())
    full = _distance_rows(c, sources, use_jit=use_jit)
    values = []
    for s, row in zip(sources, full):
        out = []
        for t in targets:
            if row[t] is None:
                raise Unreachable(s, t)
            out.append(row[t])
        values.append(tuple(out))
    return DistanceMatrix(sources, targets, tuple(values))


def all_pairs_distances(c: Complex2) -> DistanceMatrix:
    everything = range(c.n_vertices)
    return shortest_distances(c, everything, everything)


def diameter(c: Complex2) -> Fraction:
    dm = all_pairs_distances(c)
    return max((v for row in dm.values for v in row), default=Fraction(0))


def triangles_on_edge(c: Complex2, x: int, x2: int) -> int:
    """Common neighbours of the two endpoints (the triangles through the edge)."""
    if not c.has_edge(x, x2):
        raise NotAnEdge(f"({x}, {x2}) is not an edge")
    return len(c.neighbor_sets[x] & c.neighbor_sets[x2])


def local_support(c: Complex2, x: int, x2: int) -> tuple[tuple[int, ...], tuple[int, ...], DistanceMatrix]:
    """Balls around ``x`` and ``x2`` (centre first) and the distances between them.

    Distances are taken in the full complex, not just the two stars.
    """
    if x == x2:
        raise SameVertex("local support needs two distinct vertices")
    bx, bx2 = ball(c, x), ball(c, x2)
    return bx, bx2, shortest_distances(c, bx, bx2)


def boundary_vertices(c: Complex2) -> set[int]:
    """Vertices on an edge that lies in fewer than two faces.

    Needs faces; a pure graph has no notion of boundary and returns every
    vertex with an edge.
    """
    out: set[int] = set()
    for (u, v), fs in c.edge_faces.items():
        if len(fs) < 2:
            out.update((u, v))
    return out
