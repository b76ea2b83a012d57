"""Exact total vertex irregularity strength by branch-and-bound search.

Branching happens only on edge labels: once every edge at a vertex is
fixed the vertex's weight is confined to a width-``s`` window above its
sum, and completing the vertex labels is a polynomial check (the greedy
completion is exact).  A branch dies as soon as the already-closed
vertices cannot receive distinct weights from their windows, which
subsumes the pigeonhole rule that at most ``k`` closed vertices may
share one vertex sum.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass

from .bounds import degree_count_bound
from .constructors import greedy_vertex_completion
from .graph_core import Graph, GraphError, TotalLabeling


@dataclass(frozen=True)
class SearchBudget:
    """Caps on the search: node expansions and the largest label tried.

    A node is one attempted edge-label assignment.  ``max_k`` only
    matters for :func:`exact_tvs`; 0 means "number of vertices".
    """

    max_nodes: int = 10**7
    max_k: int = 0

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be >= 1")
        if self.max_k < 0:
            raise ValueError("max_k must be >= 0 (0 = default of n)")


EXACT = "exact"
INFEASIBLE = "infeasible"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class OracleResult:
    status: str
    k: int | None = None
    witness: TotalLabeling | None = None
    nodes: int = 0

    @property
    def is_exact(self) -> bool:
        return self.status == EXACT


def _branch_order(g: Graph) -> list[int]:
    """Edge order that closes vertices as early as possible.

    Greedy: repeatedly take the edge whose endpoints have the fewest
    unplaced incident edges (ties by edge index), so duplicate-weight
    pruning between closed vertices kicks in early.  Deterministic.
    """
    remaining = [g.degree(v) for v in range(g.n)]
    unused = set(range(g.num_edges))
    order = []
    while unused:
        best = min(
            unused,
            key=lambda e: (
                min(remaining[g.edges[e][0]], remaining[g.edges[e][1]]),
                remaining[g.edges[e][0]] + remaining[g.edges[e][1]],
                e,
            ),
        )
        unused.remove(best)
        order.append(best)
        u, v = g.edges[best]
        remaining[u] -= 1
        remaining[v] -= 1
    return order


def _closed_feasible(closed_sums: list[int], k: int) -> bool:
    """Can the closed vertices get distinct weights from their windows?

    Windows are [sum+1, sum+k], all of width k; sweeping them ascending
    and taking the least admissible weight is exact for such windows.
    """
    weight = 0
    for sigma in closed_sums:
        weight = max(weight + 1, sigma + 1)
        if weight > sigma + k:
            return False
    return True


def feasible_at(g: Graph, k: int, budget: SearchBudget | None = None) -> OracleResult:
    """Decide whether some labeling with labels in [1, k] is irregular.

    Returns an exact witness, a proof of infeasibility at ``k``, or a
    budget overrun.  Deterministic for identical inputs.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if g.n == 0 or g.min_degree == 0:
        raise GraphError("oracle requires a graph without isolated vertices")
    budget = budget or SearchBudget()

    order = _branch_order(g)
    edge_at = [g.edges[e] for e in order]
    # closing_at[d]: vertices whose last incident edge is placed at depth d.
    placed = [0] * g.n
    closing_at: list[list[int]] = [[] for _ in order]
    for depth, (u, v) in enumerate(edge_at):
        for w in (u, v):
            placed[w] += 1
            if placed[w] == g.degree(w):
                closing_at[depth].append(w)

    labels = [0] * g.num_edges
    sums = [0] * g.n
    closed_sums: list[int] = []
    nodes = 0

    def descend(depth: int) -> OracleResult | None:
        nonlocal nodes
        if depth == len(order):
            witness = greedy_vertex_completion(g, tuple(labels), k)
            if witness is not None:
                return OracleResult(EXACT, k=k, witness=witness, nodes=nodes)
            return None
        u, v = edge_at[depth]
        for value in range(1, k + 1):
            nodes += 1
            if nodes > budget.max_nodes:
                return OracleResult(BUDGET_EXCEEDED, nodes=nodes)
            labels[order[depth]] = value
            sums[u] += value
            sums[v] += value
            for w in closing_at[depth]:
                insort(closed_sums, sums[w])
            if _closed_feasible(closed_sums, k):
                result = descend(depth + 1)
                if result is not None:
                    return result
            for w in closing_at[depth]:
                closed_sums.remove(sums[w])
            sums[u] -= value
            sums[v] -= value
        labels[order[depth]] = 0
        return None

    result = descend(0)
    if result is not None:
        return result
    return OracleResult(INFEASIBLE, k=k, nodes=nodes)


def exact_tvs(g: Graph, budget: SearchBudget | None = None) -> OracleResult:
    """Smallest k admitting an irregular labeling, with a witness.

    Iterates k upward from the counting lower bound, so the first
    feasible k is exact.  Node accounting accumulates across the
    attempts; exhausting ``max_k`` reports a budget overrun.
    """
    budget = budget or SearchBudget()
    max_k = budget.max_k or g.n
    start, _ = degree_count_bound(g)
    total_nodes = 0
    for k in range(start, max_k + 1):
        remaining = budget.max_nodes - total_nodes
        if remaining < 1:
            return OracleResult(BUDGET_EXCEEDED, nodes=total_nodes)
        result = feasible_at(g, k, SearchBudget(max_nodes=remaining))
        total_nodes += result.nodes
        if result.status == EXACT:
            return OracleResult(EXACT, k=k, witness=result.witness, nodes=total_nodes)
        if result.status == BUDGET_EXCEEDED:
            return OracleResult(BUDGET_EXCEEDED, nodes=total_nodes)
    return OracleResult(BUDGET_EXCEEDED, nodes=total_nodes)
