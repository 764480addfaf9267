"""Uniform fairness and Rawlsian justice over graph solution sets.

Exact rational column generation with combinatorial pricing for matchings
(on edges and on vertices), independent sets, vertex covers and cliques,
plus ex-post group constraints for matchings.
"""

from .errors import (CapExceeded, FairGraphError, GraphError, InfeasibleError, ModelAssumptionError,
                     OracleError, SizeLimitError)
from .fairness import (Distribution, DualPrices, FairnessResult, Measure, PricingOracle, fairness,
                       initial_columns, make_oracle, sample, solve_colgen, solve_explicit, transform_reversed)
from .graph import Graph, VertexColoring, bipartite_double_cover, complement, degree_profile, isolated_after_removal
from .groups import (GroupConstraints, exact_budgeted_matching, feasible_requirement_vectors, group_fair_optimum,
                     group_fair_pricing, restrict_explicit, satisfies)
from .setsystems import (ExplicitSetSystem, HypergraphInvariants, ProblemKind, enumerate_family,
                         hypergraph_invariants, is_independence_system)

__version__ = "0.1.0"
