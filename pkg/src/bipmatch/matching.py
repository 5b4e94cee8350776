"""Maximum-cardinality bipartite matching (Hopcroft-Karp).

The solver works on a whole graph or on a subset of its edges; the latter
is how tight subgraphs and enumeration branches reuse it without copying
the graph. Results are deterministic for a fixed edge order: breadth-first
layers scan left vertices in index order and adjacency lists in input
order.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .graph import Matching, WeightedBipartiteGraph

_INF = -1  # sentinel distance; real layer depths are >= 0


def max_cardinality_matching(graph: WeightedBipartiteGraph,
                             edge_indices: Iterable[int] | None = None) -> Matching:
    """Find a maximum-cardinality matching, optionally restricted to a
    subset of edge indices. The returned matching always refers to edges of
    the parent graph."""
    if edge_indices is None:
        adjacency: Sequence[Sequence[int]] = graph._adj_left
    else:
        adj: list[list[int]] = [[] for _ in range(graph.n_left)]
        for e in sorted(set(edge_indices)):
            u, _v = graph.endpoints(e)
            adj[u].append(e)
        adjacency = adj

    n_left = graph.n_left
    endpoints = graph.endpoints
    mate_left: list[int | None] = [None] * n_left      # matched edge at u
    mate_right: list[int | None] = [None] * graph.n_right
    dist = [_INF] * n_left

    def bfs() -> int:
        # Layer the graph from free left vertices; returns the length (in
        # left-layers) at which the nearest free right vertex sits, or _INF.
        queue: deque[int] = deque()
        for u in range(n_left):
            if mate_left[u] is None:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found = _INF
        while queue:
            u = queue.popleft()
            if found != _INF and dist[u] >= found:
                continue
            for e in adjacency[u]:
                v = endpoints(e)[1]
                match = mate_right[v]
                if match is None:
                    if found == _INF:
                        found = dist[u] + 1
                else:
                    w = endpoints(match)[0]
                    if dist[w] == _INF:
                        dist[w] = dist[u] + 1
                        queue.append(w)
        return found

    def dfs(root: int, cap: int) -> bool:
        # Iterative alternating-path search along BFS layers; only accepts
        # augmenting paths of the phase's shortest length ``cap``.
        stack: list[tuple[int, int]] = [(root, 0)]
        path: list[tuple[int, int]] = []  # (u, edge chosen at u)
        while stack:
            u, start = stack.pop()
            advanced = False
            adj_u = adjacency[u]
            for pos in range(start, len(adj_u)):
                e = adj_u[pos]
                v = endpoints(e)[1]
                match = mate_right[v]
                if match is None:
                    if dist[u] + 1 != cap:
                        continue
                    path.append((u, e))
                    for pu, pe in path:
                        mate_left[pu] = pe
                        mate_right[endpoints(pe)[1]] = pe
                    return True
                w = endpoints(match)[0]
                if dist[w] == dist[u] + 1:
                    stack.append((u, pos + 1))
                    stack.append((w, 0))
                    path.append((u, e))
                    advanced = True
                    break
            if not advanced:
                dist[u] = _INF
                if path:
                    path.pop()
        return False

    while True:
        cap = bfs()
        if cap == _INF:
            break
        for u in range(n_left):
            if mate_left[u] is None:
                dfs(u, cap)

    return Matching(graph, [e for e in mate_left if e is not None])
