"""The tight subgraph: edges whose price sum meets the weight exactly.

Under optimal prices the perfect matchings of this subgraph are precisely
the minimum-weight perfect matchings of the parent instance, which is what
lets every weighted question downstream (all-optimal-edges, enumeration,
preferences) be answered on an unweighted subgraph.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .errors import InfeasibleDual
from .graph import Matching, WeightedBipartiteGraph
from .prices import DualPrices, _require_shape

ORACLE_MAX_SIDE = 8


class TightSubgraph:
    """The subset of parent edges that are exactly tight under a price
    system. Edges are kept as parent indices so anything computed here can
    be reported in the parent's terms."""

    __slots__ = ("_parent", "_prices", "_edge_indices", "_edge_set")

    def __init__(self, parent: WeightedBipartiteGraph, prices: DualPrices,
                 edge_indices: tuple[int, ...]):
        self._parent = parent
        self._prices = prices
        self._edge_indices = edge_indices
        self._edge_set = frozenset(edge_indices)

    @property
    def parent(self) -> WeightedBipartiteGraph:
        return self._parent

    @property
    def prices(self) -> DualPrices:
        return self._prices

    @property
    def edge_indices(self) -> tuple[int, ...]:
        return self._edge_indices

    @property
    def edge_count(self) -> int:
        return len(self._edge_indices)

    def __contains__(self, e: int) -> bool:
        return e in self._edge_set

    def __iter__(self):
        return iter(self._edge_indices)

    def pairs(self) -> list[tuple[int, int]]:
        """Tight edges as internal (left, right) index pairs."""
        return [self._parent.endpoints(e) for e in self._edge_indices]

    def to_json(self) -> dict:
        g = self._parent
        left = self._prices.left_num
        right = self._prices.right_num
        den = self._prices.den
        tight = set(self._edge_indices)
        kept = sorted(g.original_pair(e) for e in tight)
        dropped = []
        for e, (u, v, w) in enumerate(g.edges):
            if e in tight:
                continue
            slack = Fraction(w * den - left[u] - right[v], den)
            i, j = g.original_pair(e)
            entry = int(slack) if slack.denominator == 1 else f"{slack.numerator}/{slack.denominator}"
            dropped.append([i, j, entry])
        dropped.sort(key=lambda item: (item[0], item[1]))
        return {"edges": [[i, j] for i, j in kept], "dropped": dropped}


def build_gcs(graph: WeightedBipartiteGraph, prices: DualPrices) -> TightSubgraph:
    """Collect the tight edges in a single pass over the edge list.

    Raises InfeasibleDual if any edge's price sum exceeds its weight:
    with an infeasible system, "tight" would not mean anything.
    """
    _require_shape(graph, prices)
    left = prices.left_num
    right = prices.right_num
    den = prices.den
    tight = []
    bad: list[int] = []
    if den == 1:
        for e, (u, v, w) in enumerate(graph.edges):
            num = left[u] + right[v]
            if num == w:
                tight.append(e)
            elif num > w:
                bad.append(e)
    else:
        for e, (u, v, w) in enumerate(graph.edges):
            num = left[u] + right[v]
            target = w * den
            if num == target:
                tight.append(e)
            elif num > target:
                bad.append(e)
    if bad:
        u, v = graph.endpoints(bad[0])
        raise InfeasibleDual(
            f"{len(bad)} edge(s) violate dual feasibility, first at (u{u}, v{v})")
    return TightSubgraph(graph, prices, tuple(tight))


def brute_force_min_weight_pms(graph: WeightedBipartiteGraph) -> list[Matching]:
    """Exhaustive oracle: all minimum-weight perfect matchings.

    Walks every assignment of left to right vertices, so it is held to
    sides of at most ORACLE_MAX_SIDE vertices. Returns an empty list when
    no perfect matching exists. Deterministic order (lexicographic in the
    right-vertex assignment).
    """
    n, s = graph.n_left, graph.n_right
    if max(n, s) > ORACLE_MAX_SIDE:
        raise ValueError(f"brute-force oracle is limited to sides <= {ORACLE_MAX_SIDE}")
    if n != s:
        return []
    if n == 0:
        return [Matching(graph, [])]

    lookup: dict[tuple[int, int], int] = {}
    for e, (u, v, _w) in enumerate(graph.edges):
        lookup[(u, v)] = e

    best_weight: int | None = None
    best: list[tuple[int, ...]] = []
    for perm in permutations(range(n)):
        edges = []
        total = 0
        ok = True
        for u, v in enumerate(perm):
            e = lookup.get((u, v))
            if e is None:
                ok = False
                break
            edges.append(e)
            total += graph.weight(e)
        if not ok:
            continue
        if best_weight is None or total < best_weight:
            best_weight = total
            best = [tuple(edges)]
        elif total == best_weight:
            best.append(tuple(edges))
    return [Matching(graph, edges) for edges in best]
