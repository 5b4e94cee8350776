"""Two different certificates, one set of optimal matchings.

The tight subgraph keeps exactly the edges whose price sum meets their
weight. Different optimal price systems can keep different edges, yet the
perfect matchings of the tight subgraph are always the same: precisely
the minimum-weight perfect matchings of the instance. That reduction is
what turns weighted questions into unweighted ones.
"""

from bipmatch import (DualPrices, WeightedBipartiteGraph, build_gcs,
                      iter_perfect_matchings)

graph = WeightedBipartiteGraph(3, 3, [
    (0, 0, 1), (0, 1, 1),
    (1, 1, 1), (1, 2, 2),
    (2, 1, 2), (2, 2, 1),
])

# Two hand-made optimal price systems for the same instance.
system_a = DualPrices([-2, 0, 1], [3, 1, 0])
system_b = DualPrices([0, 0, 1], [1, 1, 0])

for name, prices in (("A", system_a), ("B", system_b)):
    tight = build_gcs(graph, prices)
    print(f"system {name}: tight edges {sorted(tight.pairs())}")

# The edge sets differ (system B keeps (u0, v1) as well), but the perfect
# matchings inside them coincide.
for name, prices in (("A", system_a), ("B", system_b)):
    tight = build_gcs(graph, prices)
    matchings = [sorted(graph.endpoints(e) for e in m)
                 for m in iter_perfect_matchings(graph, tight.edge_indices)]
    print(f"system {name}: optimal matchings {matchings}")

# (u0, v1) is tight under system B but belongs to no perfect matching of
# the tight subgraph, so it never shows up in an optimal matching.
