"""Solve an assignment instance and verify its optimality certificate.

A minimum-weight perfect matching comes with a price per vertex. The
prices prove optimality on their own: every edge's price sum stays at or
below its weight, and matched edges hit their weight exactly. Anyone can
re-check the certificate without re-running the solver.
"""

from fractions import Fraction

from bipmatch import (WeightedBipartiteGraph, check_complementary_slackness,
                      check_dual_feasible, dual_objective, solve_exact)

# Three workers (left), three tasks (right), integer costs.
graph = WeightedBipartiteGraph(3, 3, [
    (0, 0, 1), (0, 1, 1),
    (1, 1, 1), (1, 2, 2),
    (2, 1, 2), (2, 2, 1),
])

result = solve_exact(graph)
matching = result.matching
prices = result.prices

print("assignment:", [graph.endpoints(e) for e in matching])
print("total cost:", matching.weight())

# The certificate: no edge is underpriced ...
violations = check_dual_feasible(graph, prices)
print("feasibility violations:", violations)

# ... and each matched edge is paid exactly its weight.
for e in matching:
    u, v = graph.endpoints(e)
    slack = graph.weight(e) - prices.left_price(u) - prices.right_price(v)
    print(f"  edge (u{u}, v{v}): weight {graph.weight(e)}, slack {slack}")

print("certificate valid:", check_complementary_slackness(graph, matching, prices))

# Strong duality: the sum of all prices equals the optimal cost, so the
# prices are also a proof that no cheaper perfect matching exists.
assert dual_objective(prices) == Fraction(matching.weight())
print("dual objective:", dual_objective(prices))
