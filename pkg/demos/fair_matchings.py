"""Fair lotteries over matchings.

Each edge (or vertex) should be part of the drawn matching as often as
possible. The uniform measure insists every element gets the same chance;
the Rawlsian measure maximises the worst chance.
"""

from fairgraph import Measure, ProblemKind, fairness
from fairgraph.graph import complete_graph, cycle_graph, path_graph


def show(name, g, kind):
    for measure in Measure:
        res = fairness(g, kind, measure)
        print(f"{name:>4} {kind.value:<18} {measure.value:<9} p = {res.value}"
              f"  ({len(res.distribution.support)} members, {res.columns_generated} columns)")


show("K3", complete_graph(3), ProblemKind.MATCHING_EDGES)
show("C6", cycle_graph(6), ProblemKind.MATCHING_EDGES)
show("C5", cycle_graph(5), ProblemKind.MATCHING_VERTICES)

# the path a-b-c: b is in every nonempty matching, so no lottery can treat
# all three vertices equally, yet the worst-off vertex still gets 1/2
show("P3", path_graph(3), ProblemKind.MATCHING_VERTICES)

res = fairness(cycle_graph(5), ProblemKind.MATCHING_VERTICES, Measure.UNIFORM)
print("\nC5 lottery over covered-vertex sets:")
for member, prob in res.distribution.support:
    print(f"  {member}  {prob}")
