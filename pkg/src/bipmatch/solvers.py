"""Minimum-weight perfect matching solvers with dual certificates.

Two independent routes to an optimal primal-dual pair:

* ``solve_exact`` -- successive shortest augmenting paths with integer
  vertex potentials (Dijkstra on reduced costs). Emits integral optimal
  prices directly.
* ``solve_auction`` -- an epsilon-scaling auction run on integer-rescaled
  weights. Emits a perfect matching with fractional prices that violate
  dual feasibility by at most a chosen epsilon and are exactly tight on
  the matching.
* ``solve_via_rounding`` -- the auction at epsilon = 1/(n+1) followed by
  the price-rounding step, which restores an exact optimality certificate
  without touching the matching.

Feasibility is established up front with a maximum-cardinality matching,
so an infeasible instance fails fast with an explicit uncovered vertex
instead of a diverging price war.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from heapq import heappop, heappush

from .errors import Infeasible, NotSquare
from .graph import Matching, WeightedBipartiteGraph
from .matching import max_cardinality_matching
from .prices import DualPrices, RationalLike, _as_fraction, round_to_optimal


@dataclass
class SolveStats:
    """Coarse work counters: scaling phases and primitive iterations
    (augmentations for the exact solver, bids for the auction)."""

    phases: int = 0
    iterations: int = 0

    def to_json(self) -> dict:
        return {"phases": self.phases, "iterations": self.iterations}


@dataclass
class SolveResult:
    matching: Matching
    prices: DualPrices
    stats: SolveStats

    def to_json(self) -> dict:
        from .prices import prices_to_json
        return {
            "matching": self.matching.to_json(),
            "prices": prices_to_json(self.matching.graph, self.prices),
        }


def _require_square_feasible(graph: WeightedBipartiteGraph) -> None:
    if graph.n_left != graph.n_right:
        n, s = graph.original_sizes()
        raise NotSquare(f"perfect matching needs equal sides, got {n} and {s}")
    mcm = max_cardinality_matching(graph)
    if mcm.cardinality < graph.n_left:
        free_left = next(u for u in range(graph.n_left) if mcm.left_edge(u) is None)
        free_right = next(v for v in range(graph.n_right) if mcm.right_edge(v) is None)
        raise Infeasible(
            f"no perfect matching: maximum cardinality is {mcm.cardinality} of "
            f"{graph.n_left}; vertices {graph.original_vertex('left', free_left)} and "
            f"{graph.original_vertex('right', free_right)} stay uncovered")


def solve_exact(graph: WeightedBipartiteGraph) -> SolveResult:
    """Minimum-weight perfect matching with integral optimal prices.

    Successive shortest paths: potentials keep every reduced cost
    non-negative, each Dijkstra pass augments the matching by one edge and
    shifts the potentials so the new matched edges are exactly tight. The
    returned pair always satisfies the complementary-slackness checker.

    Raises NotSquare for unequal sides and Infeasible when no perfect
    matching exists.
    """
    _require_square_feasible(graph)
    n = graph.n_left
    stats = SolveStats(phases=0, iterations=0)
    if n == 0:
        return SolveResult(Matching(graph, []), DualPrices([], [], 1), stats)

    endpoints = graph.endpoints
    weight = graph.weight

    # Initial feasible potentials: row minimums absorb negative weights.
    left_pot = [min(weight(e) for e in graph.left_edges(u)) for u in range(n)]
    right_pot = [0] * n
    mate_left: list[int | None] = [None] * n
    mate_right: list[int | None] = [None] * n

    INF = None
    for source in range(n):
        dist_left: list[int | None] = [INF] * n
        dist_right: list[int | None] = [INF] * n
        reach_edge: list[int | None] = [None] * n  # edge that settled each right vertex
        done_left = [False] * n
        done_right = [False] * n
        dist_left[source] = 0
        heap: list[tuple[int, int, int, int]] = [(0, 0, 0, source)]
        target = -1
        target_dist = 0

        while heap:
            d, side, _tie, x = heappop(heap)
            if side == 0:
                if done_left[x] or d > dist_left[x]:  # stale entry
                    continue
                done_left[x] = True
                base = d - left_pot[x]
                for e in graph.left_edges(x):
                    if e == mate_left[x]:
                        continue
                    v = endpoints(e)[1]
                    if done_right[v]:
                        continue
                    nd = base + weight(e) - right_pot[v]
                    if dist_right[v] is INF or nd < dist_right[v]:
                        dist_right[v] = nd
                        reach_edge[v] = e
                        heappush(heap, (nd, 1, v, v))
            else:
                if done_right[x] or d > dist_right[x]:
                    continue
                done_right[x] = True
                m = mate_right[x]
                if m is None:
                    target = x
                    target_dist = d
                    break
                u = endpoints(m)[0]
                # Matched edges are tight, so the step costs nothing.
                if dist_left[u] is INF or d < dist_left[u]:
                    dist_left[u] = d
                    heappush(heap, (d, 0, u, u))
        else:
            raise AssertionError("augmenting path search exhausted a feasible graph")

        # Shift potentials so all residual costs stay non-negative and the
        # augmenting path becomes tight end to end.
        for u in range(n):
            du = dist_left[u]
            left_pot[u] -= min(du, target_dist) if du is not INF else target_dist
        for v in range(n):
            dv = dist_right[v]
            right_pot[v] += min(dv, target_dist) if dv is not INF else target_dist

        # Flip matched/unmatched along the augmenting path.
        v = target
        while v != -1:
            e = reach_edge[v]
            u = endpoints(e)[0]
            old = mate_left[u]
            mate_left[u] = e
            mate_right[v] = e
            v = endpoints(old)[1] if old is not None else -1
        stats.iterations += 1

    matched = [e for e in mate_left if e is not None]
    prices = DualPrices(left_pot, right_pot, 1)
    return SolveResult(Matching(graph, matched), prices, stats)


def solve_auction(graph: WeightedBipartiteGraph,
                  eps_final: RationalLike | None = None) -> SolveResult:
    """Epsilon-scaling auction for the assignment problem.

    Runs bidding phases with epsilon halving from the largest absolute
    weight down to ``eps_final`` (default 1/(n+1), which forces an optimal
    matching on integer weights). All arithmetic is on integer-rescaled
    weights; the returned prices are exact rationals, tight on every
    matched edge and infeasible by at most eps_final elsewhere, so the
    pair passes the epsilon-optimality checker at eps_final. With the
    default epsilon the price denominator is exactly n+1, ready for the
    rounding step.

    Larger eps_final values are accepted (the matching may then be
    suboptimal by up to n*eps_final); floats are rejected.
    """
    _require_square_feasible(graph)
    n = graph.n_left
    stats = SolveStats()
    if n == 0:
        return SolveResult(Matching(graph, []), DualPrices([], [], n + 1), stats)

    if eps_final is None:
        eps = Fraction(1, n + 1)
    else:
        eps = _as_fraction(eps_final, "eps_final")
        if eps <= 0:
            raise ValueError("eps_final must be positive")
    scale = math.lcm(n + 1, eps.denominator)
    eps_scaled = int(eps * scale)

    endpoints = graph.endpoints
    # Benefits: auction maximizes, we minimize.
    benefit = [-w * scale for (_u, _v, w) in graph.edges]
    big = 2 * scale * max(graph.max_abs_weight, 1) * (n + 1)

    price = [0] * n  # auction price per right vertex, scaled integers
    owner: list[int | None] = [None] * n
    assigned: list[int | None] = [None] * n  # edge index per left vertex

    level = graph.max_abs_weight * scale
    levels = []
    while level > eps_scaled:
        levels.append(level)
        level = max(level // 2, eps_scaled)
    levels.append(eps_scaled)

    for eps_now in levels:
        stats.phases += 1
        owner = [None] * n
        assigned = [None] * n
        free: deque[int] = deque(range(n))
        while free:
            u = free.popleft()
            best_e = -1
            best_val: int | None = None
            second_val: int | None = None
            for e in graph.left_edges(u):
                val = benefit[e] - price[endpoints(e)[1]]
                if best_val is None or val > best_val:
                    second_val = best_val
                    best_val = val
                    best_e = e
                elif second_val is None or val > second_val:
                    second_val = val
            if second_val is None:
                second_val = best_val - big  # lone option: bid high to lock it
            v = endpoints(best_e)[1]
            price[v] += best_val - second_val + eps_now
            previous = owner[v]
            if previous is not None:
                assigned[previous] = None
                free.append(previous)
            owner[v] = u
            assigned[u] = best_e
            stats.iterations += 1

    right_num = [-q for q in price]
    left_num = [0] * n
    for u in range(n):
        e = assigned[u]
        v = endpoints(e)[1]
        left_num[u] = graph.weight(e) * scale - right_num[v]
    matching = Matching(graph, [e for e in assigned if e is not None])
    return SolveResult(matching, DualPrices(left_num, right_num, scale), stats)


def solve_via_rounding(graph: WeightedBipartiteGraph) -> SolveResult:
    """Auction at epsilon = 1/(n+1) followed by price rounding: an optimal
    matching with an exact integral certificate."""
    approx = solve_auction(graph)
    exact_prices = round_to_optimal(graph, approx.matching, approx.prices)
    return SolveResult(approx.matching, exact_prices, approx.stats)
