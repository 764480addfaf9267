"""Drawing solutions from a computed lottery.

Sampling inverts the exact cumulative distribution with a seeded
generator, so a given seed always yields the same draws.
"""

from collections import Counter

from fairgraph import Measure, ProblemKind, fairness, sample
from fairgraph.graph import cycle_graph

g = cycle_graph(5)
res = fairness(g, ProblemKind.MATCHING_VERTICES, Measure.UNIFORM)
draws = sample(res.distribution, seed=2026, count=20_000)

hits = Counter(v for m in draws for v in m)
print(f"target coverage per vertex: {res.value} = {float(res.value):.3f}")
for v in g.vertices:
    print(f"  vertex {v}: {hits[v] / len(draws):.3f}")
print("first draws:", draws[:4])
