"""Closed-form bounds next to exact values.

Edge fairness always lies between 1/(maxdeg+1) and 1/maxdeg. For vertex
fairness the uniform value is either 0 or at least 2/3, and it is positive
exactly when the graph has a fractional perfect matching.
"""

import random

from fairgraph import Measure, ProblemKind, fairness
from fairgraph.analysis import bounds_report, q_factor_search, reduced_dual_zero_test
from fairgraph.graph import cycle_graph, path_graph, random_graph, star_graph

rng = random.Random(1)
cases = {"C7": cycle_graph(7), "P4": path_graph(4), "K1,4": star_graph(4)}
cases.update({f"G{i}": random_graph(7, 0.5, rng) for i in range(3)})

for name, g in cases.items():
    rep = bounds_report(g)
    lo, hi = rep.edge_fairness_bounds
    pe = fairness(g, ProblemKind.MATCHING_EDGES, Measure.UNIFORM).value
    print(f"{name:<5} edges: {lo} <= {pe} <= {hi}", end="")
    if all(g.degree(v) for v in g.vertices):
        pu = fairness(g, ProblemKind.MATCHING_VERTICES, Measure.UNIFORM).value
        pr = fairness(g, ProblemKind.MATCHING_VERTICES, Measure.RAWLSIAN).value
        print(f" | vertices: p_U = {pu}, p_R = {pr} >= {rep.rawlsian_vertex_lower}", end="")
    print()

zero, alpha = reduced_dual_zero_test(star_graph(4))
print(f"\nK1,4 uniform vertex fairness is 0: {zero}, witness prices {[str(a) for a in alpha]}")
print(f"C7 spanning odd-cycle/edge cover: {q_factor_search(cycle_graph(7))}")
