"""Exact combinatorial optimisers used as pricing oracles.

Every optimiser here breaks ties the same way: among optimal members it
returns the one with the fewest elements, then the one whose sorted index
list is lexicographically smallest. For the blossom path this is done by
an exact integer perturbation of the weights, which also makes the optimum
unique, so results never depend on the internals of the matching code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

import networkx as nx

from .errors import SizeLimitError
from .graph import Edge, Graph

Weights = Union[Sequence, Mapping]

EXHAUSTIVE_LIMIT = 10
MWIS_LIMIT = 40


@dataclass(frozen=True)
class WeightedMatchingResult:
    matching: tuple[Edge, ...]
    weight: Fraction
    is_perfect: bool


def _as_list(w: Weights, keys: Sequence) -> list[Fraction]:
    if isinstance(w, Mapping):
        return [Fraction(w.get(k, 0)) for k in keys]
    w = [Fraction(x) for x in w]
    if len(w) != len(keys):
        raise ValueError(f"expected {len(keys)} weights, got {len(w)}")
    return w


def canonical_integer_weights(weights: Sequence[Fraction]) -> list[int]:
    """Scale rational weights to integers with a lexicographic tie-break.

    For index sets S, T: ``sum(out[S]) > sum(out[T])`` iff S has larger
    weight, or equal weight and fewer elements, or equal weight and size
    and a lexicographically smaller sorted index list.
    """
    k = len(weights)
    if k == 0:
        return []
    denom = math.lcm(*(w.denominator for w in weights))
    top = 1 << k
    scale = top * (k + 1)
    return [int(w * denom) * scale + (1 << (k - 1 - i)) - top for i, w in enumerate(weights)]


def _blossom(n: int, edges: Sequence[Edge], iweights: Sequence[int]) -> list[int]:
    """Indices of the max-weight matching for integer weights."""
    h = nx.Graph()
    h.add_nodes_from(range(n))
    for idx, ((u, v), wt) in enumerate(zip(edges, iweights)):
        if wt > 0:
            h.add_edge(u, v, weight=wt, idx=idx)
    pairs = nx.max_weight_matching(h, maxcardinality=False)
    return sorted(h[u][v]["idx"] for u, v in pairs)


def _exhaustive_matching(g: Graph, w: Sequence[Fraction], only_perfect: bool = False) -> Optional[list[int]]:
    if g.n > EXHAUSTIVE_LIMIT:
        raise SizeLimitError(f"exhaustive matching search limited to {EXHAUSTIVE_LIMIT} vertices")
    best_key = None
    best = None
    edges = g.edges
    chosen: list[int] = []
    used = [False] * g.n

    def rec(start: int, total: Fraction):
        nonlocal best_key, best
        if not only_perfect or 2 * len(chosen) == g.n:
            key = (total, -len(chosen), [-i for i in chosen])
            if best_key is None or key > best_key:
                best_key, best = key, list(chosen)
        for i in range(start, len(edges)):
            u, v = edges[i]
            if not used[u] and not used[v]:
                used[u] = used[v] = True
                chosen.append(i)
                rec(i + 1, total + w[i])
                chosen.pop()
                used[u] = used[v] = False

    rec(0, Fraction(0))
    return best


def max_weight_matching(g: Graph, w: Weights, method: str = "blossom") -> WeightedMatchingResult:
    """Maximum-weight matching, exact over rationals.

    ``w`` is aligned with ``g.edges`` or maps edges to weights. The empty
    matching is allowed, so the result weight is never negative.
    ``method="exhaustive"`` enumerates all matchings (small graphs only).
    """
    wl = _as_list(w, g.edges)
    if method == "blossom":
        idx = _blossom(g.n, g.edges, canonical_integer_weights(wl))
    elif method == "exhaustive":
        idx = _exhaustive_matching(g, wl)
    else:
        raise ValueError(f"unknown method {method!r}")
    m = tuple(g.edges[i] for i in idx)
    return WeightedMatchingResult(m, sum((wl[i] for i in idx), Fraction(0)), 2 * len(m) == g.n)


def max_weight_perfect_matching(g: Graph, w: Weights, method: str = "blossom") -> Optional[WeightedMatchingResult]:
    """Maximum-weight perfect matching, or ``None`` if none exists.

    Adds a uniform bonus of ``B = 1 + sum |w_e|`` per matched vertex so
    that any larger matching beats any smaller one, then tests perfection.
    """
    if g.n % 2:
        return None
    wl = _as_list(w, g.edges)
    if method == "exhaustive":
        idx = _exhaustive_matching(g, wl, only_perfect=True)
        if idx is None:
            return None
    elif method == "blossom":
        bonus = 1 + sum((abs(x) for x in wl), Fraction(0))
        idx = _blossom(g.n, g.edges, canonical_integer_weights([x + 2 * bonus for x in wl]))
        if 2 * len(idx) != g.n:
            return None
    else:
        raise ValueError(f"unknown method {method!r}")
    m = tuple(g.edges[i] for i in idx)
    return WeightedMatchingResult(m, sum((wl[i] for i in idx), Fraction(0)), True)


def price_matching_edges(g: Graph, alpha: Weights) -> tuple[Edge, ...]:
    """Matching minimising the sum of ``alpha`` over its edges."""
    al = _as_list(alpha, g.edges)
    return max_weight_matching(g, [-a for a in al]).matching


def price_matching_vertices(g: Graph, alpha: Weights) -> tuple[int, ...]:
    """Covered-vertex set of a matching minimising the sum of ``alpha`` over it."""
    al = _as_list(alpha, range(g.n))
    res = max_weight_matching(g, [-(al[u] + al[v]) for u, v in g.edges])
    return tuple(sorted(x for e in res.matching for x in e))


def max_weight_independent_set(g: Graph, w: Weights, limit: int = MWIS_LIMIT) -> tuple[int, ...]:
    """Maximum-weight independent set by exact branch and bound.

    Only positive-weight vertices can appear (ties favour fewer elements).
    Raises :class:`SizeLimitError` when ``g.n > limit``.
    """
    if g.n > limit:
        raise SizeLimitError(f"exact independent-set search limited to {limit} vertices, got {g.n}")
    wl = _as_list(w, range(g.n))
    iw = canonical_integer_weights(wl)
    cands = [v for v in g.vertices if iw[v] > 0]
    adj = g.adjacency
    best_w = 0
    best: tuple[int, ...] = ()
    chosen: list[int] = []

    def rec(pool: list[int], cur: int):
        nonlocal best_w, best
        if cur > best_w:
            best_w, best = cur, tuple(chosen)
        if not pool or cur + sum(iw[v] for v in pool) <= best_w:
            return
        v = pool[0]
        rest = pool[1:]
        chosen.append(v)
        rec([u for u in rest if u not in adj[v]], cur + iw[v])
        chosen.pop()
        rec(rest, cur)

    rec(cands, 0)
    return best


def price_independent_set(g: Graph, alpha: Weights) -> tuple[int, ...]:
    al = _as_list(alpha, range(g.n))
    return max_weight_independent_set(g, [-a for a in al])
