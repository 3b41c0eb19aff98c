"""Exact optimal transport between finitely supported measures.

The solver scales masses and costs to integers (lcm of denominators), runs
the integer transportation simplex from :mod:`orcurv.kernels`, and maps the
optimal tree basis back to rationals.  Vertex solutions of the
transportation polytope inherit the lattice of the marginals, so couplings
come out on the ``1/Q`` grid where ``Q`` is the lcm of the mass denominators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from . import kernels
from .complex import Complex2, DistanceMatrix, shortest_distances
from .errors import (
    InfeasibleMarginals,
    MarginalsOffLattice,
    NumericOverflow,
    ShapeMismatch,
    TooLarge,
)
from .measures import Measure

Pair = tuple[int, int]


@dataclass(frozen=True)
class TransportInstance:
    mu: Measure
    nu: Measure
    cost: DistanceMatrix

    def __post_init__(self):
        if set(self.cost.rows) != set(self.mu.support) or set(self.cost.cols) != set(self.nu.support):
            raise ShapeMismatch("cost matrix must be indexed by support(mu) x support(nu)")
        if sum(self.mu.masses.values()) != sum(self.nu.masses.values()):
            raise InfeasibleMarginals("marginals carry different total mass")
        for row in self.cost.values:
            for v in row:
                if v < 0:
                    raise ValueError(f"negative cost {v}")

    @classmethod
    def from_lists(cls, mu, nu, cost) -> "TransportInstance":
        """Build from plain sequences, indexing sources and targets by position."""
        m, n = len(mu), len(nu)
        if len(cost) != m or any(len(r) != n for r in cost):
            raise ShapeMismatch(f"cost must be {m} x {n}")
        mu_m = Measure(dict(enumerate(mu)))
        nu_m = Measure(dict(enumerate(nu)))
        rows = [i for i in range(m) if mu_m[i]]
        cols = [j for j in range(n) if nu_m[j]]
        dm = DistanceMatrix(
            tuple(rows), tuple(cols), tuple(tuple(Fraction(cost[i][j]) for j in cols) for i in rows)
        )
        return cls(mu_m, nu_m, dm)

    @property
    def shape(self) -> tuple[int, int]:
        return self.cost.shape


@dataclass(frozen=True)
class Coupling:
    """Sparse transport plan; absent pairs carry zero mass."""

    entries: Mapping[Pair, Fraction]

    def __getitem__(self, pair: Pair) -> Fraction:
        return self.entries.get(pair, Fraction(0))

    def as_matrix(self, rows, cols) -> list[list[Fraction]]:
        return [[self[y, z] for z in cols] for y in rows]

    def denominators(self) -> set[int]:
        return {v.denominator for v in self.entries.values()}


@dataclass(frozen=True)
class DualCertificate:
    lam: Mapping[int, Fraction]
    lam_prime: Mapping[int, Fraction]
    nu_slack: Mapping[Pair, Fraction]

    def dual_value(self, mu: Measure, nu: Measure) -> Fraction:
        return sum((self.lam[y] * m for y, m in mu.items()), Fraction(0)) + sum(
            (self.lam_prime[z] * m for z, m in nu.items()), Fraction(0)
        )


@dataclass(frozen=True)
class TransportSolution:
    cost_value: Fraction
    coupling: Coupling
    certificate: DualCertificate
    pivots: int = field(default=0, compare=False)


def solve_transport(inst: TransportInstance, *, use_jit: bool | None = None) -> TransportSolution:
    """Optimal vertex coupling plus Kuhn-Tucker multipliers, all exact."""
    rows, cols = inst.cost.rows, inst.cost.cols
    if not rows or not cols:
        raise ShapeMismatch("empty transport instance")
    q = math.lcm(*(inst.mu[y].denominator for y in rows), *(inst.nu[z].denominator for z in cols))
    r = math.lcm(*(v.denominator for row in inst.cost.values for v in row))
    supply = [int(inst.mu[y] * q) for y in rows]
    demand = [int(inst.nu[z] * q) for z in cols]
    if sum(supply) != sum(demand):
        raise InfeasibleMarginals(f"supply {sum(supply)} != demand {sum(demand)} after scaling")
    icost = [[int(v * r) for v in row] for row in inst.cost.values]

    flow, basic, u, v, pivots = kernels.run_transport(icost, supply, demand, use_jit=use_jit)
    if pivots < 0:
        raise NumericOverflow(f"transport simplex failed (code {pivots})")

    entries: dict[Pair, Fraction] = {}
    for i, y in enumerate(rows):
        for j, z in enumerate(cols):
            f = int(flow[i, j])
            if f < 0:
                raise NumericOverflow(f"negative flow at ({y}, {z})")
            if f:
                entries[(y, z)] = Fraction(f, q)
    lam = {y: Fraction(int(u[i]), r) for i, y in enumerate(rows)}
    lam_prime = {z: Fraction(int(v[j]), r) for j, z in enumerate(cols)}
    slack = {
        (y, z): inst.cost.values[i][j] - lam[y] - lam_prime[z]
        for i, y in enumerate(rows)
        for j, z in enumerate(cols)
    }
    value = sum((m * inst.cost[p] for p, m in entries.items()), Fraction(0))
    return TransportSolution(value, Coupling(entries), DualCertificate(lam, lam_prime, slack), pivots)


@dataclass(frozen=True)
class VerificationReport:
    marginals: bool
    nonnegative: bool
    dual_feasible: bool
    complementary_slackness: bool
    strong_duality: bool
    cost_consistent: bool

    @property
    def valid(self) -> bool:
        return all(
            (
                self.marginals,
                self.nonnegative,
                self.dual_feasible,
                self.complementary_slackness,
                self.strong_duality,
                self.cost_consistent,
            )
        )


def verify_certificate(inst: TransportInstance, sol: TransportSolution) -> VerificationReport:
    """Check a primal-dual pair from first principles.

    Rows/columns with zero marginal are outside the instance; the coupling
    must not put mass there, and multipliers given for them are ignored.
    """
    rows, cols = inst.cost.rows, inst.cost.cols
    xi, cert = sol.coupling, sol.certificate
    missing = [y for y in rows if y not in cert.lam] + [z for z in cols if z not in cert.lam_prime]
    missing += [(y, z) for y in rows for z in cols if (y, z) not in cert.nu_slack]
    if missing:
        raise ShapeMismatch(f"certificate lacks entries for {missing[:5]}")

    row_set, col_set = set(rows), set(cols)
    stray = any((y not in row_set or z not in col_set) and m != 0 for (y, z), m in xi.entries.items())
    marginals = not stray
    for y in rows:
        marginals &= sum((xi[y, z] for z in cols), Fraction(0)) == inst.mu[y]
    for z in cols:
        marginals &= sum((xi[y, z] for y in rows), Fraction(0)) == inst.nu[z]

    nonnegative = all(m >= 0 for m in xi.entries.values())
    dual_feasible = all(
        cert.nu_slack[y, z] >= 0 and inst.cost[y, z] == cert.lam[y] + cert.lam_prime[z] + cert.nu_slack[y, z]
        for y in rows
        for z in cols
    )
    slackness = all(cert.nu_slack[y, z] * xi[y, z] == 0 for y in rows for z in cols)
    primal = sum((xi[y, z] * inst.cost[y, z] for y in rows for z in cols), Fraction(0))
    dual = cert.dual_value(inst.mu, inst.nu)
    return VerificationReport(
        marginals=marginals,
        nonnegative=nonnegative,
        dual_feasible=dual_feasible,
        complementary_slackness=slackness,
        strong_duality=primal == dual,
        cost_consistent=primal == sol.cost_value,
    )


def transport_between(c: Complex2, mu: Measure, nu: Measure) -> tuple[TransportInstance, TransportSolution]:
    cost = shortest_distances(c, mu.support, nu.support)
    inst = TransportInstance(mu, nu, cost)
    return inst, solve_transport(inst)


def wasserstein1(c: Complex2, mu: Measure, nu: Measure) -> Fraction:
    """W1 distance for the shortest-path metric of ``c``."""
    return transport_between(c, mu, nu)[1].cost_value


def brute_force_transport(inst: TransportInstance, lattice_q: int, *, max_cells: int = 20) -> Fraction:
    """Minimum cost over every coupling on the ``1/lattice_q`` grid.

    Test oracle only.  Rows are filled one at a time over all bounded
    compositions; results for identical remaining column capacities are
    memoised, which visits the same set of couplings as plain enumeration.
    """
    m, n = inst.shape
    if m * n > max_cells:
        raise TooLarge(f"{m} x {n} instance exceeds {max_cells} cells")
    rows, cols = inst.cost.rows, inst.cost.cols
    supply, demand = [], []
    for masses, keys, out in ((inst.mu, rows, supply), (inst.nu, cols, demand)):
        for k in keys:
            scaled = masses[k] * lattice_q
            if scaled.denominator != 1:
                raise MarginalsOffLattice(f"mass {masses[k]} is not on the 1/{lattice_q} grid")
            out.append(int(scaled))
    cost = [list(r) for r in inst.cost.values]
    if n > m:
        supply, demand = demand, supply
        cost = [list(r) for r in zip(*cost)]
        m, n = n, m

    def compositions(total: int, caps: tuple[int, ...], start: int = 0):
        if start == len(caps) - 1:
            if total <= caps[start]:
                yield (total,)
            return
        rest = sum(caps[start + 1:])
        for k in range(max(0, total - rest), min(total, caps[start]) + 1):
            for tail in compositions(total - k, caps, start + 1):
                yield (k,) + tail

    @lru_cache(maxsize=None)
    def best(i: int, remaining: tuple[int, ...]) -> Fraction | None:
        if i == m:
            return Fraction(0) if not any(remaining) else None
        out = None
        for alloc in compositions(supply[i], remaining):
            tail = best(i + 1, tuple(r - a for r, a in zip(remaining, alloc)))
            if tail is None:
                continue
            val = tail + sum((a * cost[i][j] for j, a in enumerate(alloc) if a), Fraction(0))
            if out is None or val < out:
                out = val
        return out

    result = best(0, tuple(demand))
    if result is None:
        raise InfeasibleMarginals("no lattice coupling exists")
    return result / lattice_q
