"""Bipartite instance model: graphs, matchings, and the text file format.

A weighted bipartite graph has a left side and a right side. Instances are
normalized so that the left side is never smaller than the right side; when
an input arrives the other way round the sides are swapped internally and
the swap is remembered, so every serialization speaks in the input's
original labels.

Instance file format (line oriented):

    c free-form comment
    p bip <n_left> <n_right> <n_edges>
    e <i> <j> <w>        # 1-based left index, 1-based right index, weight

Matchings serialize as JSON objects
``{"cardinality": int, "weight": int, "edges": [[i, j], ...]}`` with
1-based indices in the original orientation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParseError

# Largest admissible |weight|. Keeps 2*s*W and every accumulated sum well
# inside signed 64-bit range even after the doubling transformations.
MAX_ABS_WEIGHT = 2**40


@dataclass(frozen=True)
class VertexRef:
    """A vertex named by side ("left" or "right") and 0-based index."""

    side: str
    index: int

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")
        if self.index < 0:
            raise ValueError("vertex index must be non-negative")

    def __str__(self) -> str:
        prefix = "u" if self.side == "left" else "v"
        return f"{prefix}{self.index}"


class WeightedBipartiteGraph:
    """Immutable bipartite graph with integer edge weights.

    Edges keep the order in which they were given; every algorithm in this
    package identifies an edge by its index into that order, so subgraphs
    and matchings computed downstream always refer back to the original
    edges.
    """

    __slots__ = ("_n_left", "_n_right", "_edges", "_adj_left", "_adj_right",
                 "_max_abs_weight", "_sides_swapped")

    def __init__(self, n_left: int, n_right: int,
                 edges: Iterable[tuple[int, int, int]]):
        if n_left < 0 or n_right < 0:
            raise ValueError("side sizes must be non-negative")
        swapped = n_left < n_right
        if swapped:
            n_left, n_right = n_right, n_left

        seen: set[tuple[int, int]] = set()
        stored: list[tuple[int, int, int]] = []
        max_w = 0
        for u, v, w in edges:
            if swapped:
                u, v = v, u
            if not (0 <= u < n_left):
                raise ValueError(f"left index {u} out of range [0, {n_left})")
            if not (0 <= v < n_right):
                raise ValueError(f"right index {v} out of range [0, {n_right})")
            if not isinstance(w, int) or isinstance(w, bool):
                raise TypeError(f"edge weight must be an integer, got {w!r}")
            if abs(w) > MAX_ABS_WEIGHT:
                raise ValueError(f"|weight| {abs(w)} exceeds bound {MAX_ABS_WEIGHT}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            stored.append((u, v, w))
            if abs(w) > max_w:
                max_w = abs(w)

        adj_left: list[list[int]] = [[] for _ in range(n_left)]
        adj_right: list[list[int]] = [[] for _ in range(n_right)]
        for e, (u, v, _w) in enumerate(stored):
            adj_left[u].append(e)
            adj_right[v].append(e)

        self._n_left = n_left
        self._n_right = n_right
        self._edges = tuple(stored)
        self._adj_left = tuple(tuple(a) for a in adj_left)
        self._adj_right = tuple(tuple(a) for a in adj_right)
        self._max_abs_weight = max_w
        self._sides_swapped = swapped

    # -- basic shape -------------------------------------------------------

    @property
    def n_left(self) -> int:
        """Size of the (never smaller) left side."""
        return self._n_left

    @property
    def n_right(self) -> int:
        return self._n_right

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def max_abs_weight(self) -> int:
        """Largest |weight| over all edges; 0 for edgeless graphs."""
        return self._max_abs_weight

    @property
    def sides_swapped(self) -> bool:
        """True when the input had a larger right side and was flipped."""
        return self._sides_swapped

    @property
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """All edges as (left, right, weight) triples, in input order."""
        return self._edges

    def endpoints(self, e: int) -> tuple[int, int]:
        u, v, _w = self._edges[e]
        return u, v

    def weight(self, e: int) -> int:
        return self._edges[e][2]

    def left_edges(self, u: int) -> tuple[int, ...]:
        """Edge indices incident to left vertex u, in input order."""
        return self._adj_left[u]

    def right_edges(self, v: int) -> tuple[int, ...]:
        return self._adj_right[v]

    def edge_index(self, u: int, v: int) -> int | None:
        """Index of the edge joining left u and right v, or None."""
        for e in self._adj_left[u]:
            if self._edges[e][1] == v:
                return e
        return None

    # -- original orientation ----------------------------------------------

    def original_pair(self, e: int) -> tuple[int, int]:
        """1-based (left, right) labels of edge e in the input orientation."""
        u, v, _w = self._edges[e]
        if self._sides_swapped:
            u, v = v, u
        return u + 1, v + 1

    def original_sizes(self) -> tuple[int, int]:
        """(left, right) side sizes in the input orientation."""
        if self._sides_swapped:
            return self._n_right, self._n_left
        return self._n_left, self._n_right

    def original_vertex(self, side: str, index: int) -> VertexRef:
        """Input-orientation name of an internal vertex."""
        if self._sides_swapped:
            side = "right" if side == "left" else "left"
        return VertexRef(side, index)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedBipartiteGraph):
            return NotImplemented
        return (self._n_left == other._n_left
                and self._n_right == other._n_right
                and self._sides_swapped == other._sides_swapped
                and self._edges == other._edges)

    def __repr__(self) -> str:
        return (f"WeightedBipartiteGraph(n_left={self._n_left}, "
                f"n_right={self._n_right}, m={self.edge_count})")


class Matching:
    """A set of vertex-disjoint edges of a fixed parent graph."""

    __slots__ = ("_graph", "_edge_indices", "_mate_left", "_mate_right")

    def __init__(self, graph: WeightedBipartiteGraph, edge_indices: Iterable[int]):
        mate_left: list[int | None] = [None] * graph.n_left
        mate_right: list[int | None] = [None] * graph.n_right
        indices = sorted(set(edge_indices))
        for e in indices:
            if not (0 <= e < graph.edge_count):
                raise ValueError(f"edge index {e} out of range")
            u, v = graph.endpoints(e)
            if mate_left[u] is not None:
                raise ValueError(f"left vertex u{u} appears in two matched edges")
            if mate_right[v] is not None:
                raise ValueError(f"right vertex v{v} appears in two matched edges")
            mate_left[u] = e
            mate_right[v] = e
        self._graph = graph
        self._edge_indices = tuple(indices)
        self._mate_left = tuple(mate_left)
        self._mate_right = tuple(mate_right)

    @property
    def graph(self) -> WeightedBipartiteGraph:
        return self._graph

    @property
    def edge_indices(self) -> tuple[int, ...]:
        return self._edge_indices

    @property
    def cardinality(self) -> int:
        return len(self._edge_indices)

    @property
    def is_perfect(self) -> bool:
        g = self._graph
        return self.cardinality == g.n_left == g.n_right

    def left_edge(self, u: int) -> int | None:
        """Matched edge index at left vertex u, or None if unmatched."""
        return self._mate_left[u]

    def right_edge(self, v: int) -> int | None:
        return self._mate_right[v]

    def left_partner(self, u: int) -> int | None:
        e = self._mate_left[u]
        return None if e is None else self._graph.endpoints(e)[1]

    def right_partner(self, v: int) -> int | None:
        e = self._mate_right[v]
        return None if e is None else self._graph.endpoints(e)[0]

    def weight(self) -> int:
        return sum(self._graph.weight(e) for e in self._edge_indices)

    def __contains__(self, e: int) -> bool:
        u, _v = self._graph.endpoints(e)
        return self._mate_left[u] == e

    def __iter__(self) -> Iterator[int]:
        return iter(self._edge_indices)

    def __len__(self) -> int:
        return len(self._edge_indices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self._graph is other._graph and self._edge_indices == other._edge_indices

    def __hash__(self) -> int:
        return hash((id(self._graph), self._edge_indices))

    def __repr__(self) -> str:
        return f"Matching(cardinality={self.cardinality}, edges={self._edge_indices})"

    def to_json(self) -> dict:
        pairs = sorted(self._graph.original_pair(e) for e in self._edge_indices)
        return {
            "cardinality": self.cardinality,
            "weight": self.weight(),
            "edges": [[i, j] for i, j in pairs],
        }


def matching_weight(graph: WeightedBipartiteGraph, matching: Matching) -> int:
    """Exact integer weight of a matching of ``graph``."""
    if matching.graph is not graph:
        raise ValueError("matching belongs to a different graph")
    return matching.weight()


def matching_from_json(graph: WeightedBipartiteGraph, data: dict) -> Matching:
    """Rebuild a matching from its JSON form (1-based original labels)."""
    try:
        pairs = data["edges"]
    except (TypeError, KeyError):
        raise ParseError("matching JSON must contain an 'edges' list")
    indices = []
    for pair in pairs:
        if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
            raise ParseError(f"bad matching edge entry {pair!r}")
        i, j = pair
        if graph.sides_swapped:
            i, j = j, i
        e = graph.edge_index(i - 1, j - 1)
        if e is None:
            raise ParseError(f"matching references unknown edge ({pair[0]}, {pair[1]})")
        indices.append(e)
    return Matching(graph, indices)


# -- instance file format ----------------------------------------------------

def parse_instance(text: str) -> WeightedBipartiteGraph:
    """Parse the line-oriented instance format into a graph.

    Raises ParseError (with the offending line number) for a malformed
    header or edge line, out-of-range indices, duplicate edges, or weights
    beyond the admissible bound.
    """
    n = s = m = None
    raw_edges: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()

    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        fields = stripped.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            if len(fields) != 5 or fields[1] != "bip":
                raise ParseError(f"malformed header {stripped!r}", lineno)
            try:
                n, s, m = int(fields[2]), int(fields[3]), int(fields[4])
            except ValueError:
                raise ParseError(f"non-integer header field in {stripped!r}", lineno)
            if n < 0 or s < 0 or m < 0:
                raise ParseError("header counts must be non-negative", lineno)
        elif fields[0] == "e":
            if n is None:
                raise ParseError("edge line before header", lineno)
            if len(fields) != 4:
                raise ParseError(f"malformed edge line {stripped!r}", lineno)
            try:
                i, j, w = int(fields[1]), int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError(f"non-integer edge field in {stripped!r}", lineno)
            if not (1 <= i <= n):
                raise ParseError(f"left index {i} outside [1, {n}]", lineno)
            if not (1 <= j <= s):
                raise ParseError(f"right index {j} outside [1, {s}]", lineno)
            if abs(w) > MAX_ABS_WEIGHT:
                raise ParseError(f"|weight| {abs(w)} exceeds bound {MAX_ABS_WEIGHT}", lineno)
            if (i, j) in seen:
                raise ParseError(f"duplicate edge ({i}, {j})", lineno)
            seen.add((i, j))
            raw_edges.append((i - 1, j - 1, w))
        else:
            raise ParseError(f"unrecognized line {stripped!r}", lineno)

    if n is None:
        raise ParseError("missing header line 'p bip <n> <s> <m>'")
    if len(raw_edges) != m:
        raise ParseError(f"header announced {m} edges but file contains {len(raw_edges)}")
    return WeightedBipartiteGraph(n, s, raw_edges)


def serialize_instance(graph: WeightedBipartiteGraph) -> str:
    """Render a graph back into the instance file format.

    Output is in the original orientation and edge order, so parsing the
    result reproduces an identical graph.
    """
    if graph.sides_swapped:
        n, s = graph.n_right, graph.n_left
    else:
        n, s = graph.n_left, graph.n_right
    lines = [f"p bip {n} {s} {graph.edge_count}"]
    for e in range(graph.edge_count):
        i, j = graph.original_pair(e)
        lines.append(f"e {i} {j} {graph.weight(e)}")
    return "\n".join(lines) + "\n"
