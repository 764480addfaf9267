"""Immutable simple graphs on dense integer vertex ids.

Vertices are ``0..n-1``; an optional label table maps ids to strings for
I/O. Edges are stored as sorted pairs ``(u, v)`` with ``u < v`` in sorted
order, so every enumeration derived from a graph is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import GraphError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        canon = set()
        for e in self.edges:
            if len(e) != 2:
                raise GraphError(f"edge {e!r} is not a pair")
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e!r} has an endpoint outside 0..{self.n - 1}")
            pair = (min(u, v), max(u, v))
            if pair in canon:
                raise GraphError(f"duplicate edge {pair}")
            canon.add(pair)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        if self.labels:
            if len(self.labels) != self.n:
                raise GraphError("label table must have one entry per vertex")
            if len(set(self.labels)) != self.n:
                raise GraphError("vertex labels must be distinct")
            object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))

    @classmethod
    def from_labels(cls, vertices: Sequence[str], edges: Iterable[Sequence[str]]) -> Graph:
        """Build a graph from labelled vertices and label pairs."""
        index = {}
        for i, lab in enumerate(vertices):
            if lab in index:
                raise GraphError(f"duplicate vertex label {lab!r}")
            index[lab] = i
        pairs = []
        for e in edges:
            if len(e) != 2:
                raise GraphError(f"edge {e!r} is not a pair")
            try:
                pairs.append((index[e[0]], index[e[1]]))
            except KeyError as exc:
                raise GraphError(f"edge {list(e)!r} references unknown vertex {exc.args[0]!r}") from None
        return cls(len(index), tuple(pairs), tuple(str(v) for v in vertices))

    @property
    def vertices(self) -> range:
        return range(self.n)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def edge_index(self) -> Mapping[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def induced(self, keep: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled densely in increasing id order."""
        keep = sorted(set(keep))
        pos = {v: i for i, v in enumerate(keep)}
        edges = tuple((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos)
        labels = tuple(self.label(v) for v in keep) if self.labels else ()
        return Graph(len(keep), edges, labels)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class VertexColoring:
    """Total map vertex -> color index in ``0..k-1``."""

    color: tuple[int, ...]
    k: int

    def __post_init__(self):
        if any(not (0 <= c < self.k) for c in self.color):
            raise GraphError("color index out of range")

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[Iterable[int]]) -> VertexColoring:
        color = [-1] * n
        for i, cls_ in enumerate(classes):
            for v in cls_:
                if color[v] != -1:
                    raise GraphError(f"vertex {v} is in two color classes")
                color[v] = i
        if -1 in color:
            raise GraphError(f"vertex {color.index(-1)} has no color")
        return cls(tuple(color), len(classes))

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.color):
            out[c].append(v)
        return out

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes()]


def degree_profile(g: Graph) -> tuple[int, int, bool]:
    """Return ``(min_degree, max_degree, is_regular)``."""
    if g.n == 0:
        raise GraphError("empty graph")
    degs = [g.degree(v) for v in g.vertices]
    lo, hi = min(degs), max(degs)
    return lo, hi, lo == hi


def complement(g: Graph) -> Graph:
    edges = tuple(e for e in combinations(range(g.n), 2) if e not in g.edge_index)
    return Graph(g.n, edges, g.labels)


def bipartite_double_cover(g: Graph) -> Graph:
    """Vertex ``v`` becomes ``v`` (copy 0) and ``v + n`` (copy 1)."""
    n = g.n
    edges = []
    for u, v in g.edges:
        edges.append((u, v + n))
        edges.append((v, u + n))
    labels = ()
    if g.labels:
        labels = tuple(f"{s}^0" for s in g.labels) + tuple(f"{s}^1" for s in g.labels)
    return Graph(2 * n, tuple(edges), labels)


def isolated_after_removal(g: Graph, s: Iterable[int]) -> int:
    """Number of vertices outside ``s`` whose neighbours all lie in ``s``."""
    s = set(s)
    for v in s:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise GraphError(f"invalid vertex id {v!r}")
    return sum(1 for v in g.vertices if v not in s and g.adjacency[v] <= s)


# small named families, used by tests and demos

def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and leaves ``1..leaves``."""
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def empty_graph(n: int) -> Graph:
    return Graph(n, ())


def random_graph(n: int, p: float, rng) -> Graph:
    """Erdos-Renyi G(n, p) drawn with ``rng.random()``."""
    return Graph(n, tuple(e for e in combinations(range(n), 2) if rng.random() < p))
