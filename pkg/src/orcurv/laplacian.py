"""Local Laplace operators: positive off-diagonal on edges, zero elsewhere, rows summing to zero."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .complex import Complex2, as_fraction, edge_key, shortest_distances
from .errors import (
    InvalidLaplacian,
    IsolatedVertex,
    MissingWeight,
    NonPositiveLength,
    NonPositiveWeight,
    ZeroNormalizer,
)


@dataclass(frozen=True)
class Laplacian:
    """Row-wise sparse generator; may be asymmetric."""

    rows: Mapping[int, Mapping[int, Fraction]]

    def row(self, x: int) -> Mapping[int, Fraction]:
        return self.rows.get(x, MappingProxyType({}))

    def __getitem__(self, pair: tuple[int, int]) -> Fraction:
        x, y = pair
        return self.row(x).get(y, Fraction(0))

    def __reduce__(self):
        return _freeze, ({x: dict(r) for x, r in self.rows.items()},)


def _freeze(rows: dict[int, dict[int, Fraction]]) -> Laplacian:
    return Laplacian(MappingProxyType({x: MappingProxyType(dict(r)) for x, r in rows.items()}))


def check_axioms(c: Complex2, L: Laplacian) -> None:
    """Raise :class:`InvalidLaplacian` unless positivity, locality and zero row sums hold."""
    for x in range(c.n_vertices):
        row = L.row(x)
        nbrs = c.neighbor_sets[x]
        for y in nbrs:
            if row.get(y, 0) <= 0:
                raise InvalidLaplacian(f"entry ({x}, {y}) on an edge must be positive")
        for y, val in row.items():
            if y != x and y not in nbrs and val != 0:
                raise InvalidLaplacian(f"entry ({x}, {y}) off the edges must vanish")
        if sum(row.values(), Fraction(0)) != 0:
            raise InvalidLaplacian(f"row {x} does not sum to zero")
        if nbrs and row.get(x, 0) >= 0:
            raise InvalidLaplacian(f"diagonal entry ({x}, {x}) must be negative")


def weighted_laplacian(c: Complex2, weights: Mapping[tuple[int, int], object]) -> Laplacian:
    """``Delta[x, y] = w_xy / sum_z w_xz`` with ``Delta[x, x] = -1``."""
    w: dict[tuple[int, int], Fraction] = {}
    for (u, v), val in weights.items():
        val = as_fraction(val)
        if val <= 0:
            raise NonPositiveWeight(f"weight on ({u}, {v}) is {val}")
        w[edge_key(u, v)] = val
    rows: dict[int, dict[int, Fraction]] = {}
    for x in range(c.n_vertices):
        nbrs = c.neighbors[x]
        if not nbrs:
            raise IsolatedVertex(f"vertex {x} has no neighbours")
        try:
            local = {y: w[edge_key(x, y)] for y in nbrs}
        except KeyError as exc:
            raise MissingWeight(f"no weight for edge {exc.args[0]}") from None
        total = sum(local.values(), Fraction(0))
        rows[x] = {x: Fraction(-1), **{y: wy / total for y, wy in local.items()}}
    return _freeze(rows)


def harmonic_laplacian(c: Complex2) -> Laplacian:
    return weighted_laplacian(c, {e: 1 for e in c.edges})


def parallelepiped_laplacian(a, b, c) -> Laplacian:
    """Cotangent Laplacian on :func:`orcurv.generators.parallelepiped` ``(a, b, c)``.

    Along an edge of length ``a`` the coefficient is ``(b + c) / (2a)``, and
    cyclically; the diagonal is minus the row sum, so it is not normalised
    to -1.
    """
    from .generators import parallelepiped

    a, b, c = (as_fraction(v) for v in (a, b, c))
    if min(a, b, c) <= 0:
        raise NonPositiveLength("box edge lengths must be positive")
    box = parallelepiped(a, b, c)
    coeff = {a: (b + c) / (2 * a), b: (c + a) / (2 * b), c: (a + b) / (2 * c)}
    # lengths may coincide (a == b); the coefficient is then the same anyway
    rows: dict[int, dict[int, Fraction]] = {}
    for x in range(box.n_vertices):
        row = {y: coeff[box.length(x, y)] for y in box.neighbors[x]}
        row[x] = -sum(row.values(), Fraction(0))
        rows[x] = row
    return _freeze(rows)


def jump_normalizer(c: Complex2, L: Laplacian, x: int) -> Fraction:
    """``sum_{z ~ x} d(x, z) * Delta[x, z]``."""
    c.check_vertex(x)
    nbrs = c.neighbors[x]
    dist = shortest_distances(c, [x], nbrs)
    total = sum((dist[x, z] * L[x, z] for z in nbrs), Fraction(0))
    if total <= 0:
        raise ZeroNormalizer(f"jump normaliser at {x} is {total}")
    return total
