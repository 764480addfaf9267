"""Ex-post group fairness: absolute/relative group constraints and the
exact-budgeted matching reduction used to optimise over group-fair
matchings for vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Hashable, Iterable, Mapping, Optional, Sequence

from .errors import InfeasibleError, ModelAssumptionError
from .graph import Graph, VertexColoring
from .pricing import WeightedMatchingResult, max_weight_perfect_matching
from .setsystems import ExplicitSetSystem

MAX_GROUPS = 6


@dataclass(frozen=True)
class GroupConstraints:
    """Disjoint groups with absolute bounds and relative ratio constraints.

    ``relative`` holds triples ``(i, j, ratio)`` meaning
    ``|m & G_i| <= ratio * |m & G_j|``. Upper bounds are clamped to the
    group size on construction.
    """

    groups: tuple[frozenset, ...]
    lower: tuple[int, ...]
    upper: tuple[int, ...]
    relative: tuple[tuple[int, int, Fraction], ...] = ()
    names: tuple[str, ...] = ()

    def __post_init__(self):
        k = len(self.groups)
        if len(self.lower) != k or len(self.upper) != k:
            raise ValueError("one (lower, upper) pair is needed per group")
        seen: set = set()
        for i, grp in enumerate(self.groups):
            if seen & grp:
                raise ValueError(f"group {i} overlaps an earlier group")
            seen |= grp
        for lo, hi in zip(self.lower, self.upper):
            if not (0 <= lo <= hi):
                raise ValueError(f"bounds must satisfy 0 <= lower <= upper, got ({lo}, {hi})")
        object.__setattr__(self, "upper", tuple(min(hi, len(g)) for hi, g in zip(self.upper, self.groups)))
        rel = []
        for i, j, ratio in self.relative:
            ratio = Fraction(ratio)
            if ratio < 0:
                raise ValueError("relative ratios must be nonnegative")
            if not (0 <= i < k and 0 <= j < k):
                raise ValueError(f"relative pair ({i}, {j}) references an unknown group")
            rel.append((i, j, ratio))
        object.__setattr__(self, "relative", tuple(rel))
        if self.names and len(self.names) != k:
            raise ValueError("one name is needed per group")

    @classmethod
    def create(cls, groups: Sequence[Iterable[Hashable]], bounds: Optional[Mapping[int, tuple[int, int]]] = None,
               relative: Iterable = (), names: Sequence[str] = ()) -> GroupConstraints:
        """Groups with default bounds ``[0, |G_i|]`` unless given in ``bounds``."""
        gs = tuple(frozenset(g) for g in groups)
        bounds = bounds or {}
        lower = tuple(bounds.get(i, (0, len(g)))[0] for i, g in enumerate(gs))
        upper = tuple(bounds.get(i, (0, len(g)))[1] for i, g in enumerate(gs))
        return cls(gs, lower, upper, tuple(relative), tuple(names))

    @property
    def k(self) -> int:
        return len(self.groups)

    def counts(self, member: Iterable) -> list[int]:
        ms = set(member)
        return [len(ms & g) for g in self.groups]

    def allows(self, counts: Sequence[int]) -> bool:
        for c, lo, hi in zip(counts, self.lower, self.upper):
            if not (lo <= c <= hi):
                return False
        return all(counts[i] <= ratio * counts[j] for i, j, ratio in self.relative)


def satisfies(member: Iterable, c: GroupConstraints) -> bool:
    return c.allows(c.counts(member))


def restrict_explicit(s: ExplicitSetSystem, c: GroupConstraints) -> ExplicitSetSystem:
    """Keep only group-fair members.

    The result may lack the empty set or leave elements uncovered; check
    ``contains_empty`` and ``uncovered()``.
    """
    fam = tuple(m for m in s.family if satisfies(m, c))
    if not fam:
        raise ModelAssumptionError("empty restricted family")
    return ExplicitSetSystem(s.ground, fam)


def feasible_requirement_vectors(c: GroupConstraints, sizes: Sequence[int]) -> list[tuple[int, ...]]:
    """All exact per-group coverage counts compatible with ``c``, in lex order."""
    if c.k > MAX_GROUPS:
        raise ValueError(f"too many groups: {c.k} > {MAX_GROUPS}")
    ranges = [range(lo, min(hi, n) + 1) for lo, hi, n in zip(c.lower, c.upper, sizes)]
    return [r for r in product(*ranges) if all(r[i] <= ratio * r[j] for i, j, ratio in c.relative)]


def exact_budgeted_matching(g: Graph, colors: VertexColoring, r: Sequence[int],
                            w: Optional[Sequence] = None) -> Optional[WeightedMatchingResult]:
    """Max vertex-weight matching covering exactly ``r[i]`` vertices of color i.

    Builds the auxiliary graph with ``n_i - r_i`` dummy vertices joined to
    every vertex of color i (weight 0), gives original edges weight
    ``w(u) + w(v)``, and takes a maximum-weight perfect matching. Returns
    ``None`` when no such matching exists.
    """
    if len(colors.color) != g.n:
        raise ValueError("coloring must cover every vertex")
    if len(r) != colors.k:
        raise ValueError("requirement vector length differs from color count")
    w = [Fraction(1)] * g.n if w is None else [Fraction(x) for x in w]
    classes = colors.classes()
    edges = list(g.edges)
    weights = [w[u] + w[v] for u, v in edges]
    nxt = g.n
    for i, cls_ in enumerate(classes):
        if not (0 <= r[i] <= len(cls_)):
            raise ValueError(f"requirement {r[i]} for color {i} outside [0, {len(cls_)}]")
        for _ in range(len(cls_) - r[i]):
            for v in cls_:
                edges.append((v, nxt))
                weights.append(Fraction(0))
            nxt += 1
    aux = Graph(nxt, tuple(edges))
    wmap = dict(zip(((min(e), max(e)) for e in edges), weights))
    res = max_weight_perfect_matching(aux, wmap)
    if res is None:
        return None
    m = tuple(e for e in res.matching if e[1] < g.n)
    return WeightedMatchingResult(m, res.weight, 2 * len(m) == g.n)


def _vertex_classes(g: Graph, c: GroupConstraints) -> tuple[VertexColoring, bool]:
    """Coloring by group, plus one implicit class for ungrouped vertices."""
    for grp in c.groups:
        for v in grp:
            if not (isinstance(v, int) and 0 <= v < g.n):
                raise ValueError(f"group element {v!r} is not a vertex of the graph")
    rest = set(g.vertices).difference(*c.groups) if c.groups else set(g.vertices)
    classes = [sorted(grp) for grp in c.groups]
    if rest:
        classes.append(sorted(rest))
    return VertexColoring.from_classes(g.n, classes), bool(rest)


def group_fair_optimum(g: Graph, c: GroupConstraints, w: Optional[Sequence] = None) -> Optional[WeightedMatchingResult]:
    """Max vertex-weight matching whose covered set satisfies ``c``.

    Maximises over every feasible requirement vector; ties on weight go to
    the lexicographically smallest vector. ``None`` if nothing is feasible.
    """
    colors, implicit = _vertex_classes(g, c)
    sizes = colors.sizes()
    vectors = feasible_requirement_vectors(c, sizes[:c.k])
    extra = range(sizes[-1] + 1) if implicit else [None]
    best = None
    for r in vectors:
        for r0 in extra:
            req = r if r0 is None else r + (r0,)
            res = exact_budgeted_matching(g, colors, req, w)
            if res is not None and (best is None or res.weight > best.weight):
                best = res
    return best


def group_fair_pricing(g: Graph, c: GroupConstraints, alpha: Sequence) -> tuple[int, ...]:
    """Covered set of a group-fair matching minimising the sum of ``alpha``."""
    if isinstance(alpha, Mapping):
        alpha = [alpha.get(v, 0) for v in g.vertices]
    res = group_fair_optimum(g, c, [-Fraction(a) for a in alpha])
    if res is None:
        raise InfeasibleError("no matching satisfies the group constraints")
    return tuple(sorted(x for e in res.matching for x in e))
