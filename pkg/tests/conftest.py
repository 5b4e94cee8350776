"""Shared fixtures and brute-force oracles for the test suite."""

import random

import pytest

from bipmatch import DualPrices, Matching, WeightedBipartiteGraph

# Canonical 3x3 fixture used throughout: two optimal price systems with
# different tight subgraphs but the same (unique) optimal matching.
FIG1_EDGES = [(0, 0, 1), (0, 1, 1), (1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)]
FIG1_TEXT = """\
c canonical 3x3 fixture
p bip 3 3 6
e 1 1 1
e 1 2 1
e 2 2 1
e 2 3 2
e 3 2 2
e 3 3 1
"""
# Unique optimal matching {u0v0, u1v1, u2v2}, weight 3; the only other
# perfect matching is {u0v0, u1v2, u2v1}, weight 5.
M_STAR = (0, 2, 5)
M_OTHER = (0, 3, 4)


@pytest.fixture
def fig1():
    return WeightedBipartiteGraph(3, 3, FIG1_EDGES)


@pytest.fixture
def fig1_p1():
    return DualPrices([-2, 0, 1], [3, 1, 0])


@pytest.fixture
def fig1_p2():
    return DualPrices([0, 0, 1], [1, 1, 0])


def make_feasible_square(rng: random.Random, n_max: int = 7,
                         weights=(-9, 9)) -> WeightedBipartiteGraph:
    """Random square graph guaranteed feasible: a hidden permutation
    matching plus a random sprinkle of extra edges."""
    n = rng.randint(1, n_max)
    perm = list(range(n))
    rng.shuffle(perm)
    cells = {(u, perm[u]) for u in range(n)}
    rest = [(u, v) for u in range(n) for v in range(n) if (u, v) not in cells]
    cells.update(rng.sample(rest, rng.randint(0, len(rest))))
    return WeightedBipartiteGraph(
        n, n, [(u, v, rng.randint(*weights)) for (u, v) in sorted(cells)])


def make_any_graph(rng: random.Random, n_max: int = 5,
                   weights=(-9, 9)) -> WeightedBipartiteGraph:
    """Random graph of any shape: possibly unbalanced, possibly without
    any perfect matching, possibly edgeless."""
    n = rng.randint(0, n_max)
    s = rng.randint(0, n_max)
    if n < s:
        n, s = s, n
    cells = [(u, v) for u in range(n) for v in range(s)]
    chosen = rng.sample(cells, rng.randint(0, len(cells))) if cells else []
    return WeightedBipartiteGraph(
        n, s, [(u, v, rng.randint(*weights)) for (u, v) in sorted(chosen)])


def brute_force_optimum_matchings(graph: WeightedBipartiteGraph) -> list[frozenset]:
    """All matchings of maximum cardinality and, among those, minimum
    weight, as frozensets of edge indices. Exponential; sides <= 6 only."""
    assert max(graph.n_left, graph.n_right) <= 6
    results: dict[frozenset, None] = {}
    best = None

    def rec(u, used, chosen, weight):
        nonlocal best
        if u == graph.n_left:
            key = (-len(chosen), weight)
            if best is None or key < best:
                best = key
                results.clear()
                results[frozenset(chosen)] = None
            elif key == best:
                results[frozenset(chosen)] = None
            return
        rec(u + 1, used, chosen, weight)
        for e in graph.left_edges(u):
            v = graph.endpoints(e)[1]
            if not (used >> v) & 1:
                chosen.append(e)
                rec(u + 1, used | (1 << v), chosen, weight + graph.weight(e))
                chosen.pop()

    rec(0, 0, [], 0)
    return list(results)


def brute_force_optimum(graph: WeightedBipartiteGraph) -> tuple[int, int]:
    """(cardinality, weight) of the optimum matchings of ``graph``."""
    sets = brute_force_optimum_matchings(graph)
    some = next(iter(sets))
    return len(some), sum(graph.weight(e) for e in some)


def perturbed_eps_pair(graph: WeightedBipartiteGraph, matching: Matching,
                       prices: DualPrices, deltas) -> DualPrices:
    """Shift each right price up by its delta and the matched left price
    down by the same amount: tightness on the matching is preserved and
    feasibility degrades by at most max(deltas)."""
    right = [prices.right_price(v) + d for v, d in enumerate(deltas)]
    left = list(prices.left_prices())
    for e in matching.edge_indices:
        u, v = graph.endpoints(e)
        left[u] -= deltas[v]
    return DualPrices.from_values(left, right)
