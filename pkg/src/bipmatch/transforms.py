"""Reductions from optimum matchings to minimum-weight perfect matchings.

An optimum matching is a maximum-cardinality matching of minimum weight.
On unbalanced or infeasible graphs it is found by transforming the
instance into a balanced one that always (or conditionally) has a perfect
matching, solving there, and keeping only the edges that came from the
original graph:

* full doubling: mirror the whole graph, join every vertex to its mirror
  copy with heavy link edges (weight 2*s*W). Works unconditionally.
* half doubling: the same without the right-side links (link weight is a
  free constant k). Needs a matching covering the right side.
* padding: add artificial right vertices joined to every left vertex at
  constant cost k. Also needs a matching covering the right side, and
  stays small when the imbalance is small.
"""

from __future__ import annotations

from dataclasses import dataclass

from .allowed import EdgeSet, optimal_edges
from .errors import CoverageRequired
from .graph import MAX_ABS_WEIGHT, Matching, WeightedBipartiteGraph
from .matching import max_cardinality_matching
from .solvers import solve_exact

FULL_DOUBLING = "doubling"
HALF_DOUBLING = "half-doubling"
PADDING = "artificial"
AUTO = "auto"

STRATEGIES = (FULL_DOUBLING, HALF_DOUBLING, PADDING)

# Imbalance ratio below which auto-selection prefers padding over half
# doubling; a tuning default, not part of any contract.
SMALL_IMBALANCE_RATIO = 8


@dataclass(frozen=True)
class EdgeOrigin:
    """Where a transformed edge came from: kind is one of "original",
    "flipped", "link_left", "link_right", "dummy"; parent is the parent
    edge index for original/flipped edges, None otherwise."""

    kind: str
    parent: int | None = None


@dataclass(frozen=True)
class TransformedInstance:
    kind: str
    parent: WeightedBipartiteGraph
    graph: WeightedBipartiteGraph
    origin: tuple[EdgeOrigin, ...]
    k: int | None = None

    def original_edge_indices(self, edges) -> list[int]:
        """Map transformed edge indices back to parent indices, dropping
        everything that is not an original edge."""
        kept = []
        for e in edges:
            tag = self.origin[e]
            if tag.kind == "original":
                kept.append(tag.parent)
        return kept


def first_doubling(graph: WeightedBipartiteGraph) -> TransformedInstance:
    """Mirror the graph and link each vertex to its copy with weight 2*s*W.

    The transformed graph is balanced with sides n+s and always has a
    perfect matching (the link edges alone form one), so it works even
    when the input has no matching covering the right side.

    When every weight is zero the link weight is clamped to 2*s*1: with
    zero-cost links the reduction loses its cardinality pressure (skipping
    a vertex pair would be free) and could return a non-maximum matching.
    """
    n, s = graph.n_left, graph.n_right
    link_w = 2 * s * max(graph.max_abs_weight, 1)
    if link_w > MAX_ABS_WEIGHT:
        raise ValueError(
            f"link weight 2*s*W = {link_w} exceeds the weight bound {MAX_ABS_WEIGHT}")

    # Left side: original left vertices, then mirrored right copies.
    # Right side: original right vertices, then mirrored left copies.
    edges: list[tuple[int, int, int]] = []
    origin: list[EdgeOrigin] = []
    for p, (u, v, w) in enumerate(graph.edges):
        edges.append((u, v, w))
        origin.append(EdgeOrigin("original", p))
    for p, (u, v, w) in enumerate(graph.edges):
        edges.append((n + v, s + u, w))
        origin.append(EdgeOrigin("flipped", p))
    for u in range(n):
        edges.append((u, s + u, link_w))
        origin.append(EdgeOrigin("link_left"))
    for v in range(s):
        edges.append((n + v, v, link_w))
        origin.append(EdgeOrigin("link_right"))

    doubled = WeightedBipartiteGraph(n + s, n + s, edges)
    return TransformedInstance(FULL_DOUBLING, graph, doubled, tuple(origin))


def second_doubling(graph: WeightedBipartiteGraph, k: int = 0) -> TransformedInstance:
    """The doubling without right-side links; left links weigh k.

    The transformed graph has a perfect matching exactly when the input
    has a matching covering its right side.
    """
    n, s = graph.n_left, graph.n_right
    edges: list[tuple[int, int, int]] = []
    origin: list[EdgeOrigin] = []
    for p, (u, v, w) in enumerate(graph.edges):
        edges.append((u, v, w))
        origin.append(EdgeOrigin("original", p))
    for p, (u, v, w) in enumerate(graph.edges):
        edges.append((n + v, s + u, w))
        origin.append(EdgeOrigin("flipped", p))
    for u in range(n):
        edges.append((u, s + u, k))
        origin.append(EdgeOrigin("link_left"))

    halved = WeightedBipartiteGraph(n + s, n + s, edges)
    return TransformedInstance(HALF_DOUBLING, graph, halved, tuple(origin), k)


def artificial_vertices(graph: WeightedBipartiteGraph, k: int = 0) -> TransformedInstance:
    """Balance the graph by padding the right side with n-s artificial
    vertices joined to every left vertex at weight k."""
    n, s = graph.n_left, graph.n_right
    edges: list[tuple[int, int, int]] = []
    origin: list[EdgeOrigin] = []
    for p, (u, v, w) in enumerate(graph.edges):
        edges.append((u, v, w))
        origin.append(EdgeOrigin("original", p))
    for u in range(n):
        for v in range(s, n):
            edges.append((u, v, k))
            origin.append(EdgeOrigin("dummy"))

    padded = WeightedBipartiteGraph(n, n, edges)
    return TransformedInstance(PADDING, graph, padded, tuple(origin), k)


def restrict_back(transformed: TransformedInstance, matching: Matching) -> Matching:
    """Keep exactly the original-tagged edges of a perfect matching of the
    transformed graph, as a matching of the parent."""
    if matching.graph is not transformed.graph:
        raise ValueError("matching does not belong to the transformed graph")
    if not matching.is_perfect:
        raise ValueError("restriction needs a perfect matching of the transformed graph")
    return Matching(transformed.parent,
                    transformed.original_edge_indices(matching.edge_indices))


def _transform(graph: WeightedBipartiteGraph, strategy: str, k: int) -> TransformedInstance:
    if strategy == FULL_DOUBLING:
        return first_doubling(graph)
    if strategy == HALF_DOUBLING:
        return second_doubling(graph, k)
    if strategy == PADDING:
        return artificial_vertices(graph, k)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of "
                     f"{STRATEGIES + (AUTO,)}")


def _covers_right_side(graph: WeightedBipartiteGraph) -> bool:
    return max_cardinality_matching(graph).cardinality == graph.n_right


def choose_strategy(graph: WeightedBipartiteGraph) -> str:
    """Pick a transformation: full doubling when the right side cannot be
    covered, padding for small imbalance, half doubling otherwise."""
    if not _covers_right_side(graph):
        return FULL_DOUBLING
    n, s = graph.n_left, graph.n_right
    if (n - s) * SMALL_IMBALANCE_RATIO <= n:
        return PADDING
    return HALF_DOUBLING


def optimum_matching(graph: WeightedBipartiteGraph, strategy: str = AUTO,
                     k: int = 0) -> Matching:
    """A maximum-cardinality matching of minimum weight.

    Pipeline: transform, solve the balanced instance exactly, keep the
    original edges. Half doubling and padding require a matching covering
    the right side (CoverageRequired otherwise); full doubling works on
    any graph.
    """
    if strategy == AUTO:
        strategy = choose_strategy(graph)
    if strategy != FULL_DOUBLING and not _covers_right_side(graph):
        raise CoverageRequired(
            f"strategy {strategy!r} needs a matching covering the right side; "
            f"use {FULL_DOUBLING!r} for this instance")
    transformed = _transform(graph, strategy, k)
    result = solve_exact(transformed.graph)
    return restrict_back(transformed, result.matching)


def optimal_edges_general(graph: WeightedBipartiteGraph, strategy: str = AUTO,
                          k: int = 0) -> EdgeSet:
    """All edges occurring in some optimum matching: the optimal edges of
    the transformed instance, intersected with the original edges."""
    if strategy == AUTO:
        strategy = choose_strategy(graph)
    if strategy != FULL_DOUBLING and not _covers_right_side(graph):
        raise CoverageRequired(
            f"strategy {strategy!r} needs a matching covering the right side; "
            f"use {FULL_DOUBLING!r} for this instance")
    transformed = _transform(graph, strategy, k)
    result = solve_exact(transformed.graph)
    lifted = optimal_edges(transformed.graph, result.prices)
    return EdgeSet(graph, transformed.original_edge_indices(lifted.indices))
