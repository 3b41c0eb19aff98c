"""Finitely supported probability measures and the random walks built from them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import TYPE_CHECKING, Mapping

from .complex import Complex2, as_fraction, degree, shortest_distances
from .errors import IsolatedVertex, InvalidMeasure, InvalidTime, NegativeMass

if TYPE_CHECKING:
    from .laplacian import Laplacian


@dataclass(frozen=True, init=False)
class Measure:
    """Probability measure with exact masses; zero masses are dropped."""

    masses: Mapping[int, Fraction]

    def __init__(self, masses: Mapping[int, object]):
        clean: dict[int, Fraction] = {}
        for y, m in masses.items():
            m = as_fraction(m)
            if m < 0:
                raise InvalidMeasure(f"negative mass {m} at {y}")
            if m:
                clean[int(y)] = m
        if sum(clean.values(), Fraction(0)) != 1:
            raise InvalidMeasure(f"masses sum to {sum(clean.values(), Fraction(0))}, not 1")
        object.__setattr__(self, "masses", MappingProxyType(dict(sorted(clean.items()))))

    def __reduce__(self):
        return Measure, (dict(self.masses),)

    def __getitem__(self, y: int) -> Fraction:
        return self.masses.get(y, Fraction(0))

    def __len__(self) -> int:
        return len(self.masses)

    def __eq__(self, other) -> bool:
        return isinstance(other, Measure) and dict(self.masses) == dict(other.masses)

    def __hash__(self) -> int:
        return hash(tuple(self.masses.items()))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self.masses)

    def items(self):
        return self.masses.items()

    def __repr__(self) -> str:
        body = ", ".join(f"{y}: {m}" for y, m in self.masses.items())
        return f"Measure({{{body}}})"


def check_time(t) -> Fraction:
    t = as_fraction(t)
    if not 0 <= t <= 1:
        raise InvalidTime(f"t = {t} is outside [0, 1]")
    return t


def dirac(x: int) -> Measure:
    return Measure({x: 1})


def sphere_uniform(c: Complex2, x: int) -> Measure:
    d = degree(c, x)
    if d == 0:
        raise IsolatedVertex(f"vertex {x} has no neighbours")
    return Measure({y: Fraction(1, d) for y in c.neighbors[x]})


def ball_uniform(c: Complex2, x: int) -> Measure:
    d = degree(c, x)
    share = Fraction(1, d + 1)
    return Measure({x: share, **{y: share for y in c.neighbors[x]}})


def lazy_walk(c: Complex2, x: int, t) -> Measure:
    """Keep ``1 - t`` at ``x`` and spread ``t`` evenly over the neighbours."""
    t = check_time(t)
    d = degree(c, x)
    if d == 0:
        raise IsolatedVertex(f"vertex {x} has no neighbours")
    masses = {x: 1 - t}
    masses.update({y: t / d for y in c.neighbors[x]})
    return Measure(masses)


def laplacian_walk(c: Complex2, L: "Laplacian", x: int, t) -> Measure:
    """First-order walk ``delta_x + t * Delta[x, .] / N(x)`` whose jump is exactly ``t``.

    ``N(x)`` is :func:`~orcurv.laplacian.jump_normalizer`.  Raises
    :class:`NegativeMass` (carrying the largest admissible ``t``) when the
    centre would go negative.
    """
    from .laplacian import jump_normalizer

    t = check_time(t)
    norm = jump_normalizer(c, L, x)
    row = L.row(x)
    diag = row.get(x, Fraction(0))
    centre = 1 + t * diag / norm
    if centre < 0:
        raise NegativeMass(
            f"t = {t} leaves mass {centre} at vertex {x}; largest admissible t is {-norm / diag}",
            max_t=-norm / diag,
        )
    masses = {x: centre}
    for y, coeff in row.items():
        if y != x:
            masses[y] = t * coeff / norm
    return Measure(masses)


def jump(c: Complex2, mu: Measure, x: int) -> Fraction:
    """Expected distance from ``x`` under ``mu``."""
    dm = shortest_distances(c, [x], mu.support)
    return sum((m * dm[x, y] for y, m in mu.items()), Fraction(0))
