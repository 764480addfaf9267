"""Uniform fairness and Rawlsian justice over set systems.

Both measures are linear programs over distributions ``x`` on the family:
maximise ``p`` such that every ground element is covered with probability
exactly ``p`` (uniform) or at least ``p`` (Rawlsian). :func:`solve_explicit`
solves them over an enumerated family; :func:`solve_colgen` generates
columns on demand from a pricing oracle, stopping when the exact reduced
cost ``min_m sum(alpha[a] for a in m) + beta`` is nonnegative.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence

from . import exactlp
from .errors import ModelAssumptionError, OracleError
from .graph import Graph, complement
from .groups import GroupConstraints, group_fair_optimum, group_fair_pricing, restrict_explicit, satisfies
from .pricing import price_independent_set, price_matching_edges, price_matching_vertices
from .setsystems import (DEFAULT_CAP, ExplicitSetSystem, Member, ProblemKind, enumerate_family,
                         ground_set, is_member)

_ZERO = Fraction(0)


class Measure(enum.Enum):
    UNIFORM = "uniform"
    RAWLSIAN = "rawlsian"


@dataclass(frozen=True)
class Distribution:
    support: tuple[tuple[Member, Fraction], ...]

    def __post_init__(self):
        if any(p < 0 for _, p in self.support):
            raise ValueError("negative probability")
        if sum((p for _, p in self.support), _ZERO) != 1:
            raise ValueError("probabilities do not sum to 1")
        members = [m for m, _ in self.support]
        if len(set(members)) != len(members):
            raise ValueError("repeated support member")

    def coverage(self, ground: Sequence) -> dict:
        cov = {a: _ZERO for a in ground}
        for m, p in self.support:
            for a in m:
                cov[a] += p
        return cov


@dataclass(frozen=True)
class DualPrices:
    alpha: dict
    beta: Fraction

    def reduced_cost(self, member: Member) -> Fraction:
        return sum((self.alpha[a] for a in member), _ZERO) + self.beta


@dataclass(frozen=True)
class FairnessResult:
    measure: Measure
    value: Fraction
    distribution: Distribution
    coverage: dict
    columns_generated: int
    certificate: Optional[DualPrices]
    kind: Optional[ProblemKind] = None


@dataclass
class PricingOracle:
    """Returns a family member minimising ``sum(alpha[a] for a in m)``.

    ``graph`` and ``kind`` describe the family the oracle searches; they
    are used to check returned members.
    """

    kind: ProblemKind
    graph: Graph
    price: Callable[[Mapping], Member]
    constraints: Optional[GroupConstraints] = None

    def __call__(self, alpha: Mapping) -> Member:
        return tuple(self.price(alpha))

    def contains(self, member: Member) -> bool:
        if not is_member(self.graph, self.kind, member):
            return False
        return self.constraints is None or satisfies(member, self.constraints)


def explicit_oracle(s: ExplicitSetSystem, g: Graph, kind: ProblemKind,
                    constraints: Optional[GroupConstraints] = None) -> PricingOracle:
    """Pricing by scanning an enumerated family (ties: fewest, then first)."""

    def price(alpha):
        return min(s.family, key=lambda m: (sum((alpha[a] for a in m), _ZERO), len(m)))

    return PricingOracle(kind, g, price, constraints)


def make_oracle(g: Graph, kind: ProblemKind, constraints: Optional[GroupConstraints] = None,
                cap: int = DEFAULT_CAP) -> PricingOracle:
    if kind is ProblemKind.CLIQUE:
        kind, g = ProblemKind.INDEPENDENT_SET, complement(g)
    if constraints is not None:
        if kind is ProblemKind.MATCHING_VERTICES:
            return PricingOracle(kind, g, lambda a: group_fair_pricing(g, constraints, a), constraints)
        restricted = restrict_explicit(enumerate_family(g, kind, cap), constraints)
        return explicit_oracle(restricted, g, kind, constraints)
    if kind is ProblemKind.MATCHING_EDGES:
        return PricingOracle(kind, g, lambda a: price_matching_edges(g, a))
    if kind is ProblemKind.MATCHING_VERTICES:
        return PricingOracle(kind, g, lambda a: price_matching_vertices(g, a))
    if kind is ProblemKind.INDEPENDENT_SET:
        return PricingOracle(kind, g, lambda a: price_independent_set(g, a))
    raise ValueError(f"no direct pricing oracle for {kind.value}")


def _master(ground: Sequence, columns: Sequence[Member], measure: Measure,
            phase_one: bool = False, minimize: bool = False) -> exactlp.LinearProgram:
    """Variables: one x per column, then p (free), then the phase-one ghost.

    Row i < len(ground) is the coverage row of ground[i]; the last row is
    the convexity row.
    """
    ncols = len(columns)
    nvars = ncols + 1 + (1 if phase_one else 0)
    obj = [_ZERO] * nvars
    if phase_one:
        obj[-1] = Fraction(-1)
    else:
        obj[ncols] = Fraction(1)
    lower = [_ZERO] * nvars
    lower[ncols] = None
    lp = exactlp.LinearProgram(obj, sense="min" if minimize else "max", lower=lower)
    pos = {a: i for i, a in enumerate(ground)}
    rows = [[_ZERO] * nvars for _ in ground]
    for k, m in enumerate(columns):
        for a in m:
            rows[pos[a]][k] = Fraction(1)
    if measure is Measure.UNIFORM:
        rel = exactlp.EQ
    else:
        rel = exactlp.LE if minimize else exactlp.GE
    for row in rows:
        row[ncols] = Fraction(-1)
        lp.add(row, rel, 0)
    conv = [Fraction(1)] * ncols + [_ZERO] + ([Fraction(1)] if phase_one else [])
    lp.add(conv, exactlp.EQ, 1)
    return lp


def _result(ground, columns, sol: exactlp.LpSolution, measure, kind, ncols_generated) -> FairnessResult:
    ncols = len(columns)
    support = tuple((columns[k], sol.primal[k]) for k in range(ncols) if sol.primal[k] > 0)
    dist = Distribution(support)
    alpha = {a: sol.dual[i] for i, a in enumerate(ground)}
    cert = DualPrices(alpha, sol.dual[len(ground)])
    return FairnessResult(measure, sol.primal[ncols], dist, dist.coverage(ground), ncols_generated, cert, kind)


def _check_ground(s_ground, uncovered):
    if not s_ground:
        raise ModelAssumptionError("empty ground set")
    if uncovered:
        raise ModelAssumptionError(f"element uncoverable: {uncovered[0]!r}")


def solve_explicit(s: ExplicitSetSystem, measure: Measure, minimize: bool = False,
                   kind: Optional[ProblemKind] = None) -> FairnessResult:
    """Exact optimum of the fairness LP over the whole family.

    ``minimize=True`` is for upward-closed families such as vertex covers:
    uniform minimises the common probability, Rawlsian minimises the
    largest coverage.
    """
    _check_ground(s.ground, s.uncovered())
    lp = _master(s.ground, s.family, measure, minimize=minimize)
    sol = exactlp.solve(lp)
    if sol.status == exactlp.INFEASIBLE:
        raise ModelAssumptionError("no distribution over the family covers all elements uniformly")
    return _result(s.ground, s.family, sol, measure, kind, len(s.family))


def initial_columns(g: Graph, kind: ProblemKind, constraints: Optional[GroupConstraints] = None,
                    oracle: Optional[PricingOracle] = None) -> list[Member]:
    """Empty set (when allowed) plus one member containing each element.

    Unconstrained members are the smallest obvious ones: single edges,
    singletons, or the endpoints of one edge. Under constraints, matching
    for vertices uses the group-fair optimiser; other kinds scan the
    restricted family held by ``oracle``.
    """
    if kind is ProblemKind.CLIQUE:
        kind, g = ProblemKind.INDEPENDENT_SET, complement(g)
    ground = ground_set(g, kind)
    cols: list[Member] = []
    seen: set = set()

    def push(m):
        m = tuple(m)
        if m not in seen:
            seen.add(m)
            cols.append(m)

    if constraints is not None and kind is ProblemKind.MATCHING_VERTICES and group_fair_optimum(g, constraints) is None:
        raise ModelAssumptionError("empty restricted family")
    if constraints is None or satisfies((), constraints):
        push(())
    for a in ground:
        if any(a in m for m in cols):
            continue
        m = _member_containing(g, kind, a, constraints, oracle)
        if m is None:
            raise ModelAssumptionError(f"element uncoverable: {a!r}")
        push(m)
    return cols


def _member_containing(g, kind, a, constraints, oracle) -> Optional[Member]:
    if constraints is None:
        if kind is ProblemKind.MATCHING_EDGES:
            return (a,)
        if kind is ProblemKind.INDEPENDENT_SET:
            return (a,)
        if kind is ProblemKind.MATCHING_VERTICES:
            nbrs = sorted(g.neighbors(a))
            return tuple(sorted((a, nbrs[0]))) if nbrs else None
        raise ValueError(kind)
    if kind is ProblemKind.MATCHING_VERTICES:
        w = [Fraction(1) if v == a else _ZERO for v in g.vertices]
        res = group_fair_optimum(g, constraints, w)
        if res is None or res.weight <= 0:
            return None
        return tuple(sorted(x for e in res.matching for x in e))
    if oracle is None:
        oracle = make_oracle(g, kind, constraints)
    # explicit oracle: a price of -1 on ``a`` alone finds a member containing it
    alpha = {b: (Fraction(-1) if b == a else _ZERO) for b in ground_set(g, kind)}
    m = oracle(alpha)
    return m if a in m else None


def solve_colgen(g: Graph, kind: ProblemKind, measure: Measure, oracle: Optional[PricingOracle] = None,
                 constraints: Optional[GroupConstraints] = None, cap: int = DEFAULT_CAP) -> FairnessResult:
    """Fairness LP by column generation with exact pricing.

    Vertex covers are solved through independent sets and
    :func:`transform_reversed`; cliques as independent sets of the
    complement graph.
    """
    if kind is ProblemKind.VERTEX_COVER:
        if constraints is not None:
            raise ValueError("group constraints on vertex covers need method='exact'")
        res = solve_colgen(g, ProblemKind.INDEPENDENT_SET, measure, oracle)
        return transform_reversed(res, g.n)
    work_g, work_kind = g, kind
    if kind is ProblemKind.CLIQUE:
        work_g, work_kind = complement(g), ProblemKind.INDEPENDENT_SET
    if oracle is None:
        oracle = make_oracle(work_g, work_kind, constraints, cap)
    ground = ground_set(work_g, work_kind)
    if not ground:
        raise ModelAssumptionError("empty ground set")
    columns = initial_columns(work_g, work_kind, constraints, oracle)
    present = set(columns)

    def price(sol) -> Optional[Member]:
        alpha = {a: sol.dual[i] for i, a in enumerate(ground)}
        beta = sol.dual[len(ground)]
        m = oracle(alpha)
        if not oracle.contains(m):
            raise OracleError(f"oracle violation: {m!r} is not in the family")
        rc = sum((alpha[a] for a in m), _ZERO) + beta
        if rc >= 0:
            return None
        if m in present:
            raise OracleError(f"no progress: column {m!r} already present with reduced cost {rc}")
        return m

    if measure is Measure.UNIFORM and () not in present:
        while True:
            sol = exactlp.solve(_master(ground, columns, measure, phase_one=True))
            m = price(sol)
            if m is None:
                break
            columns.append(m)
            present.add(m)
        if sol.objective < 0:
            raise ModelAssumptionError("no distribution over the family covers all elements uniformly")

    while True:
        sol = exactlp.solve(_master(ground, columns, measure))
        m = price(sol)
        if m is None:
            break
        columns.append(m)
        present.add(m)
    return _result(ground, columns, sol, measure, kind, len(columns))


def transform_reversed(result: FairnessResult, n: int) -> FairnessResult:
    """Independent-set result -> vertex-cover result via complements.

    Value becomes ``1 - p``; each support member ``m`` becomes ``V - m``
    with the same probability. The certificate is kept from the input.
    """
    every = range(n)
    support = tuple((tuple(v for v in every if v not in set(m)), p) for m, p in result.distribution.support)
    dist = Distribution(support)
    return FairnessResult(result.measure, 1 - result.value, dist, dist.coverage(tuple(every)),
                          result.columns_generated, result.certificate, ProblemKind.VERTEX_COVER)


def sample(d: Distribution, seed: int, count: int) -> list[Member]:
    """Draw ``count`` members by exact inversion of the cumulative weights."""
    rng = random.Random(seed)
    denom = math.lcm(*(p.denominator for _, p in d.support))
    cuts = []
    acc = 0
    for m, p in d.support:
        acc += int(p * denom)
        cuts.append(acc)
    out = []
    for _ in range(count):
        t = rng.randrange(denom)
        for (m, _), c in zip(d.support, cuts):
            if t < c:
                out.append(m)
                break
    return out


def explicit_system(g: Graph, kind: ProblemKind, constraints: Optional[GroupConstraints] = None,
                    cap: int = DEFAULT_CAP) -> ExplicitSetSystem:
    s = enumerate_family(g, kind, cap)
    return s if constraints is None else restrict_explicit(s, constraints)


def fairness(g: Graph, kind: ProblemKind, measure: Measure, method: str = "auto",
             constraints: Optional[GroupConstraints] = None, cap: int = DEFAULT_CAP) -> FairnessResult:
    """One entry point for every problem kind.

    ``method="auto"`` uses column generation for matchings and enumeration
    for vertex problems on at most 20 vertices, column generation above.
    """
    if method == "auto":
        if kind in (ProblemKind.MATCHING_EDGES, ProblemKind.MATCHING_VERTICES) or g.n > 20:
            method = "colgen"
        else:
            method = "exact"
    if method == "colgen":
        return solve_colgen(g, kind, measure, constraints=constraints, cap=cap)
    if method == "exact":
        s = explicit_system(g, kind, constraints, cap)
        return solve_explicit(s, measure, minimize=kind is ProblemKind.VERTEX_COVER, kind=kind)
    raise ValueError(f"unknown method {method!r}")
