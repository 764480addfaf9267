"""Independent sets, vertex covers and cliques.

Independent-set pricing is exact branch and bound, so these runs are
exponential in the worst case; at desk scale they are instant. Vertex
covers are solved through independent sets (the complement of an
independent set is a cover) and cliques through the complement graph.
"""

import random

from fairgraph import Measure, ProblemKind, fairness
from fairgraph.graph import complete_graph, cycle_graph, random_graph

graphs = {"C5": cycle_graph(5), "K4": complete_graph(4), "G(9,0.4)": random_graph(9, 0.4, random.Random(3))}

for name, g in graphs.items():
    row = []
    for kind in (ProblemKind.INDEPENDENT_SET, ProblemKind.VERTEX_COVER, ProblemKind.CLIQUE):
        colgen = fairness(g, kind, Measure.UNIFORM, method="colgen").value
        exact = fairness(g, kind, Measure.UNIFORM, method="exact").value
        assert colgen == exact
        row.append(f"{kind.value}={colgen}")
    print(f"{name:<9}", "  ".join(row))

# independent-set fairness is 1 / fractional chromatic number
p = fairness(cycle_graph(5), ProblemKind.INDEPENDENT_SET, Measure.UNIFORM).value
print(f"\nfractional chromatic number of C5: {1 / p}")
