"""Closed-form bounds and structural tests for matching fairness.

The production tests (fractional perfect matching via the bipartite double
cover, the reduced dual system) are polynomial. The brute-force
characterisations at the bottom quantify over vertex subsets and are
limited to ``BRUTE_FORCE_LIMIT`` vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Optional

from . import exactlp
from .errors import ModelAssumptionError, SizeLimitError
from .graph import Graph, bipartite_double_cover, degree_profile, isolated_after_removal
from .pricing import max_weight_matching

BRUTE_FORCE_LIMIT = 10


@dataclass(frozen=True)
class GraphInvariants:
    matching_number: int
    fractional_matching_number: Fraction
    has_perfect_matching: bool
    has_fractional_perfect_matching: bool
    max_degree: int
    min_degree: int


@dataclass(frozen=True)
class BoundsReport:
    edge_fairness_bounds: tuple[Fraction, Fraction]
    rawlsian_vertex_lower: Fraction
    pu_positive: bool
    pu_dichotomy_lower: Fraction


def matching_number(g: Graph) -> int:
    return len(max_weight_matching(g, [1] * len(g.edges)).matching)


def compute_invariants(g: Graph) -> GraphInvariants:
    nu = matching_number(g)
    frac = Fraction(matching_number(bipartite_double_cover(g)), 2)
    lo, hi, _ = degree_profile(g)
    return GraphInvariants(nu, frac, 2 * nu == g.n, frac * 2 == g.n, hi, lo)


def pu_positive_matching_vertices(g: Graph) -> bool:
    """Uniform vertex-matching fairness is positive iff a fractional perfect matching exists."""
    return compute_invariants(g).has_fractional_perfect_matching


def reduced_dual_zero_test(g: Graph) -> tuple[bool, Optional[list[Fraction]]]:
    """Decide ``p_U == 0`` for matching-for-vertices from the edge-only dual.

    Minimises ``sum(alpha)`` subject to ``alpha_u + alpha_v >= 0`` per edge
    and ``sum(alpha) >= -1``. A negative optimum gives the certificate.
    """
    lp = exactlp.LinearProgram([1] * g.n, sense="min", lower=[None] * g.n)
    for u, v in g.edges:
        row = [0] * g.n
        row[u] = row[v] = 1
        lp.add(row, exactlp.GE, 0)
    lp.add([1] * g.n, exactlp.GE, -1)
    sol = exactlp.solve(lp)
    if sol.objective < 0:
        return True, sol.primal
    return False, None


def bounds_report(g: Graph) -> BoundsReport:
    """Fractional Vizing bounds and the vertex-matching lower bounds.

    ``rawlsian_vertex_lower`` is 2/3 on regular graphs and
    ``1/(maxdeg - mindeg + 1)`` otherwise; with an isolated vertex the
    Rawlsian value is 0 and so is the reported bound.
    """
    if not g.edges:
        raise ModelAssumptionError("no edges")
    lo, hi, regular = degree_profile(g)
    if regular:
        rawls = Fraction(2, 3)
    elif lo == 0:
        rawls = Fraction(0)
    else:
        rawls = Fraction(1, hi - lo + 1)
    pos = pu_positive_matching_vertices(g)
    return BoundsReport((Fraction(1, hi + 1), Fraction(1, hi)), rawls, pos,
                        Fraction(2, 3) if pos else Fraction(0))


def check_matching_size_condition(g: Graph) -> bool:
    """``nu(G) >= |E| / maxdeg``; necessary for edge fairness ``1/maxdeg``."""
    if not g.edges:
        raise ModelAssumptionError("no edges")
    _, hi, _ = degree_profile(g)
    return matching_number(g) * hi >= len(g.edges)


def q_factor_exists(g: Graph) -> bool:
    """Spanning subgraph of disjoint edges and odd cycles exists.

    Decided by the fractional perfect matching test; small graphs are
    cross-checked against :func:`q_factor_search`.
    """
    ans = compute_invariants(g).has_fractional_perfect_matching if g.n else True
    if g.n <= BRUTE_FORCE_LIMIT:
        found = q_factor_search(g) is not None
        if found != ans:
            raise RuntimeError(f"Q-factor search disagrees with fractional perfect matching on {g!r}")
    return ans


# brute-force characterisations

def _guard(g: Graph):
    if g.n > BRUTE_FORCE_LIMIT:
        raise SizeLimitError(f"brute-force check limited to {BRUTE_FORCE_LIMIT} vertices")


def q_factor_search(g: Graph) -> Optional[list[tuple[int, ...]]]:
    """Explicit Q-factor: list of components (2-vertex edges or odd cycles in order)."""
    _guard(g)
    adj = g.adjacency

    def cycles_from(v: int, pool: frozenset):
        path = [v]
        on = {v}

        def ext():
            last = path[-1]
            if len(path) >= 3 and len(path) % 2 == 1 and v in adj[last]:
                yield tuple(path)
            for u in sorted(adj[last] & pool):
                if u not in on and u > v:
                    path.append(u)
                    on.add(u)
                    yield from ext()
                    path.pop()
                    on.discard(u)

        yield from ext()

    @lru_cache(maxsize=None)
    def cover(pool: frozenset):
        if not pool:
            return ()
        v = min(pool)
        for u in sorted(adj[v] & pool):
            rest = cover(pool - {v, u})
            if rest is not None:
                return ((v, u),) + rest
        for cyc in cycles_from(v, pool):
            rest = cover(pool - set(cyc))
            if rest is not None:
                return (cyc,) + rest
        return None

    res = cover(frozenset(g.vertices))
    return None if res is None else list(res)


def independent_set_condition(g: Graph) -> bool:
    """Every independent set S has ``|S| <= |N(S)|``."""
    _guard(g)
    adj = g.adjacency
    for k in range(1, g.n + 1):
        for s in combinations(g.vertices, k):
            ss = set(s)
            if any(adj[u] & ss for u in s):
                continue
            nbhd = set().union(*(adj[u] for u in s)) - ss
            if len(s) > len(nbhd):
                return False
    return True


def isolated_vertices_condition(g: Graph) -> bool:
    """For every S, ``G - S`` has at most ``|S|`` isolated vertices."""
    _guard(g)
    for k in range(g.n + 1):
        for s in combinations(g.vertices, k):
            if isolated_after_removal(g, s) > k:
                return False
    return True
