"""Set systems (ground set, family of feasible subsets) built from graphs.

Members are sorted tuples of ground elements. For edge problems the
ground elements are the edge pairs of ``g.edges``; for vertex problems
they are vertex ids.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Optional, Sequence

from . import exactlp
from .errors import CapExceeded, ModelAssumptionError
from .graph import Graph, complement
from .pricing import max_weight_perfect_matching

DEFAULT_CAP = 100_000

Member = tuple


class ProblemKind(enum.Enum):
    MATCHING_EDGES = "matching-edges"
    MATCHING_VERTICES = "matching-vertices"
    INDEPENDENT_SET = "independent-set"
    VERTEX_COVER = "vertex-cover"
    CLIQUE = "clique"

    @property
    def on_edges(self) -> bool:
        return self is ProblemKind.MATCHING_EDGES


def ground_set(g: Graph, kind: ProblemKind) -> tuple:
    return g.edges if kind.on_edges else tuple(g.vertices)


@dataclass(frozen=True)
class ExplicitSetSystem:
    ground: tuple
    family: tuple[Member, ...]

    @classmethod
    def build(cls, ground: Sequence[Hashable], members: Iterable[Iterable[Hashable]]) -> ExplicitSetSystem:
        """Canonicalise: sort each member, deduplicate, order by (size, content)."""
        ground = tuple(ground)
        pos = {a: i for i, a in enumerate(ground)}
        seen = set()
        for m in members:
            key = tuple(sorted(set(m), key=pos.__getitem__))
            seen.add(key)
        fam = sorted(seen, key=lambda m: (len(m), [pos[a] for a in m]))
        return cls(ground, tuple(fam))

    @cached_property
    def position(self) -> dict:
        return {a: i for i, a in enumerate(self.ground)}

    @property
    def contains_empty(self) -> bool:
        return () in self.family_set

    @cached_property
    def family_set(self) -> frozenset:
        return frozenset(self.family)

    def uncovered(self) -> list:
        hit = set()
        for m in self.family:
            hit.update(m)
        return [a for a in self.ground if a not in hit]

    def validate(self):
        """Raise unless the empty set is present and every element is covered."""
        if not self.contains_empty:
            raise ModelAssumptionError("family does not contain the empty set")
        missing = self.uncovered()
        if missing:
            raise ModelAssumptionError(f"element uncoverable: {missing[0]!r}")

    def __len__(self):
        return len(self.family)


@dataclass(frozen=True)
class HypergraphInvariants:
    fractional_partitioning: Optional[Fraction]  # None means infinite
    fractional_covering: Fraction


def _matchings(g: Graph):
    """Yield every matching as a tuple of edges (canonical recursion order)."""
    edges = g.edges
    used = [False] * g.n
    chosen: list = []

    def rec(start: int):
        yield tuple(chosen)
        for i in range(start, len(edges)):
            u, v = edges[i]
            if not used[u] and not used[v]:
                used[u] = used[v] = True
                chosen.append(edges[i])
                yield from rec(i + 1)
                chosen.pop()
                used[u] = used[v] = False

    yield from rec(0)


def _independent_sets(g: Graph):
    adj = g.adjacency
    chosen: list[int] = []

    def rec(start: int, blocked: frozenset):
        yield tuple(chosen)
        for v in range(start, g.n):
            if v not in blocked:
                chosen.append(v)
                yield from rec(v + 1, blocked | adj[v])
                chosen.pop()

    yield from rec(0, frozenset())


def _capped(gen, cap: int, key=None):
    out = set()
    for m in gen:
        out.add(key(m) if key else m)
        if len(out) > cap:
            raise CapExceeded(cap, len(out))
    return out


def enumerate_family(g: Graph, kind: ProblemKind, cap: int = DEFAULT_CAP) -> ExplicitSetSystem:
    """Enumerate every solution of ``kind`` in ``g``.

    Raises :class:`CapExceeded` once more than ``cap`` distinct members
    appear. Matching-for-vertices members are covered-vertex sets, so two
    matchings covering the same vertices give one member.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    if kind is ProblemKind.MATCHING_EDGES:
        fam = _capped(_matchings(g), cap)
    elif kind is ProblemKind.MATCHING_VERTICES:
        fam = _capped(_matchings(g), cap, key=lambda m: tuple(sorted(x for e in m for x in e)))
    elif kind is ProblemKind.INDEPENDENT_SET:
        fam = _capped(_independent_sets(g), cap)
    elif kind is ProblemKind.VERTEX_COVER:
        every = frozenset(g.vertices)
        fam = _capped(_independent_sets(g), cap, key=lambda s: tuple(sorted(every - set(s))))
    elif kind is ProblemKind.CLIQUE:
        fam = _capped(_independent_sets(complement(g)), cap)
    else:
        raise ValueError(kind)
    return ExplicitSetSystem.build(ground_set(g, kind), fam)


def is_member(g: Graph, kind: ProblemKind, member: Sequence) -> bool:
    """Decide membership of one candidate set without enumerating."""
    if kind is ProblemKind.MATCHING_EDGES:
        if any(tuple(e) not in g.edge_index for e in member):
            return False
        ends = [x for e in member for x in e]
        return len(ends) == len(set(ends))
    verts = list(member)
    if len(set(verts)) != len(verts) or any(not (isinstance(v, int) and 0 <= v < g.n) for v in verts):
        return False
    if kind is ProblemKind.MATCHING_VERTICES:
        sub = g.induced(verts)
        return max_weight_perfect_matching(sub, [0] * len(sub.edges)) is not None
    if kind is ProblemKind.INDEPENDENT_SET:
        return not any(g.has_edge(u, v) for u, v in combinations(verts, 2))
    if kind is ProblemKind.CLIQUE:
        return all(g.has_edge(u, v) for u, v in combinations(verts, 2))
    if kind is ProblemKind.VERTEX_COVER:
        s = set(verts)
        return all(u in s or v in s for u, v in g.edges)
    raise ValueError(kind)


def is_independence_system(s: ExplicitSetSystem) -> bool:
    """True iff the family contains the empty set and is downward closed."""
    fam = s.family_set
    if () not in fam:
        return False
    for m in s.family:
        for i in range(len(m)):
            if m[:i] + m[i + 1:] not in fam:
                return False
    return True


def is_upward_closed(s: ExplicitSetSystem) -> bool:
    fam = s.family_set
    for m in s.family:
        present = set(m)
        for a in s.ground:
            if a not in present:
                bigger = tuple(sorted(present | {a}, key=s.position.__getitem__))
                if bigger not in fam:
                    return False
    return True


def _hypergraph_lp(s: ExplicitSetSystem, relation: str) -> exactlp.LinearProgram:
    pos = s.position
    lp = exactlp.LinearProgram([1] * len(s.family), sense="min")
    rows = [[0] * len(s.family) for _ in s.ground]
    for k, m in enumerate(s.family):
        for a in m:
            rows[pos[a]][k] = 1
    for row in rows:
        lp.add(row, relation, 1)
    return lp


def hypergraph_invariants(s: ExplicitSetSystem) -> HypergraphInvariants:
    """Fractional partitioning and covering numbers of ``(ground, family)``."""
    missing = s.uncovered()
    if missing:
        raise ModelAssumptionError(f"element uncoverable: {missing[0]!r}")
    part = exactlp.solve(_hypergraph_lp(s, exactlp.EQ))
    cover = exactlp.solve(_hypergraph_lp(s, exactlp.GE))
    return HypergraphInvariants(part.objective if part.optimal else None, cover.objective)
