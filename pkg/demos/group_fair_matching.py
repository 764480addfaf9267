"""Group constraints on matchings for vertices.

Vertices belong to groups; a matching is admissible only if the number of
covered vertices in each group lies within bounds. Optimising over such
matchings reduces to maximum-weight perfect matching on an auxiliary
graph, one run per feasible vector of exact group counts.
"""

from fractions import Fraction

from fairgraph import (GroupConstraints, Measure, ModelAssumptionError, ProblemKind, VertexColoring,
                       exact_budgeted_matching, fairness)
from fairgraph.graph import Graph

# two communities joined by a few edges
g = Graph(6, ((0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5), (1, 4)))
colors = VertexColoring((0, 0, 0, 1, 1, 1), 2)

for r in [(2, 2), (3, 1), (1, 1), (0, 2)]:
    res = exact_budgeted_matching(g, colors, r)
    print(f"cover exactly {r}: {'infeasible' if res is None else res.matching}")

plain = fairness(g, ProblemKind.MATCHING_VERTICES, Measure.RAWLSIAN).value
# at most two covered vertices from the first community
c = GroupConstraints.create([{0, 1, 2}, {3, 4, 5}], {0: (0, 2)})
capped = fairness(g, ProblemKind.MATCHING_VERTICES, Measure.RAWLSIAN, constraints=c)
print(f"\nRawlsian value without groups: {plain}")
print(f"Rawlsian value with the cap: {capped.value}")
for member, prob in capped.distribution.support:
    print(f"  {member}  {prob}")

# a ratio constraint that cannot cover vertex 0 is reported, not hidden
strict = GroupConstraints.create([{0, 1, 2}, {3, 4, 5}], relative=[(0, 1, Fraction(1, 2))])
try:
    fairness(g, ProblemKind.MATCHING_VERTICES, Measure.RAWLSIAN, constraints=strict)
except ModelAssumptionError as exc:
    print(f"\nratio 1/2: {exc}")
