"""Immutable graphs, total labelings, and the irregularity verifier.

A *total labeling* assigns a positive integer to every vertex and every
edge.  The *vertex sum* of ``v`` is the sum of labels on edges incident
to ``v``; its *weight* adds the vertex's own label.  A labeling is
irregular when all weights are pairwise distinct, and the smallest bound
``k`` on the labels for which an irregular labeling exists is the total
vertex irregularity strength of the graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass


class GraphError(ValueError):
    """Base class for graph construction and labeling errors."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexIndexError(GraphError):
    pass


class LengthMismatchError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    ``adjacency[v]`` holds the indices into ``edges`` of the edges
    incident to ``v``, so edge labels can be summed per vertex without
    searching the edge list.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def min_degree(self) -> int:
        return min(len(a) for a in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(len(a) for a in self.adjacency)

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]


def build_graph(n: int, edge_list: list[tuple[int, int]] | tuple) -> Graph:
    """Validate an edge list and build the adjacency structure.

    Edge order is preserved exactly as given.  Rejects self-loops,
    duplicate edges (regardless of endpoint order), and out-of-range
    endpoints, each with its own error type.
    """
    if n < 0:
        raise VertexIndexError(f"vertex count must be non-negative, got {n}")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexIndexError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append((u, v))
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for idx, (u, v) in enumerate(edges):
        adjacency[u].append(idx)
        adjacency[v].append(idx)
    return Graph(n=n, edges=tuple(edges), adjacency=tuple(tuple(a) for a in adjacency))


@dataclass(frozen=True)
class TotalLabeling:
    """Positive labels on all vertices and edges, with declared bound ``s``.

    The declared ``s`` is the claimed bound; the actual maximum used may
    be smaller (see :func:`verify`).
    """

    vertex_labels: tuple[int, ...]
    edge_labels: tuple[int, ...]
    s: int

    def __post_init__(self):
        labels = self.vertex_labels + self.edge_labels
        if any(x < 1 for x in labels):
            raise GraphError("labels must be positive integers")
        if labels and max(labels) > self.s:
            raise GraphError(
                f"label {max(labels)} exceeds declared maximum s={self.s}"
            )

    @staticmethod
    def of(vertex_labels, edge_labels, s: int) -> "TotalLabeling":
        return TotalLabeling(tuple(vertex_labels), tuple(edge_labels), s)


@dataclass(frozen=True)
class WeightProfile:
    """Per-vertex sums of incident edge labels and resulting weights."""

    vertex_sums: tuple[int, ...]
    weights: tuple[int, ...]


@dataclass(frozen=True)
class SumDistribution:
    """Counts of vertices per vertex-sum value, ascending by sum."""

    classes: tuple[tuple[int, int], ...]

    def __post_init__(self):
        sums = [s for s, _ in self.classes]
        if sums != sorted(set(sums)):
            raise GraphError("sum classes must be strictly ascending")
        if any(c <= 0 for _, c in self.classes):
            raise GraphError("class counts must be positive")

    @property
    def total(self) -> int:
        return sum(c for _, c in self.classes)

    def counts(self) -> tuple[int, ...]:
        """Class sizes only, ascending by sum value."""
        return tuple(c for _, c in self.classes)


@dataclass(frozen=True)
class VerificationReport:
    is_irregular: bool
    max_label_used: int
    duplicate_weight_witness: tuple[int, int] | None
    weight_range: tuple[int, int]


def _check_lengths(g: Graph, vertex_labels, edge_labels) -> None:
    if vertex_labels is not None and len(vertex_labels) != g.n:
        raise LengthMismatchError(
            f"expected {g.n} vertex labels, got {len(vertex_labels)}"
        )
    if len(edge_labels) != g.num_edges:
        raise LengthMismatchError(
            f"expected {g.num_edges} edge labels, got {len(edge_labels)}"
        )


def vertex_sums(g: Graph, edge_labels) -> list[int]:
    """Sum of incident edge labels for every vertex."""
    _check_lengths(g, None, edge_labels)
    return [sum(edge_labels[i] for i in adj) for adj in g.adjacency]


def weight_profile(g: Graph, lab: TotalLabeling) -> WeightProfile:
    """Vertex sums and weights of ``lab`` on ``g``."""
    _check_lengths(g, lab.vertex_labels, lab.edge_labels)
    sums = vertex_sums(g, lab.edge_labels)
    weights = [s + lv for s, lv in zip(sums, lab.vertex_labels)]
    return WeightProfile(tuple(sums), tuple(weights))


def verify(g: Graph, lab: TotalLabeling) -> VerificationReport:
    """Check whether all vertex weights are pairwise distinct.

    On failure the report carries the first colliding vertex pair (in
    index order) as a minimal counterexample.
    """
    if g.n == 0:
        raise GraphError("cannot verify an empty graph")
    profile = weight_profile(g, lab)
    witness: tuple[int, int] | None = None
    first_at: dict[int, int] = {}
    for v, w in enumerate(profile.weights):
        if w in first_at:
            witness = (first_at[w], v)
            break
        first_at[w] = v
    max_label = max(lab.vertex_labels + lab.edge_labels)
    return VerificationReport(
        is_irregular=witness is None,
        max_label_used=max_label,
        duplicate_weight_witness=witness,
        weight_range=(min(profile.weights), max(profile.weights)),
    )


def sum_distribution(g: Graph, edge_labels) -> SumDistribution:
    """Distribution of vertex sums induced by an edge labeling alone."""
    counts = Counter(vertex_sums(g, edge_labels))
    return SumDistribution(tuple(sorted(counts.items())))
