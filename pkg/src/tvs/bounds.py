"""Lower bounds on the total vertex irregularity strength.

Both bounds are counting arguments on the graph alone.  A vertex of
degree at most ``r`` has weight between ``delta + 1`` and ``(r + 1) * k``
under any labeling with labels at most ``k``; packing the vertices of
degree <= r into that window forces ``k >= ceil((m + delta) / (r + 1))``.
Taking ``r`` = maximum degree recovers the classical
``ceil((n + delta) / (Delta + 1))`` bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import Graph, GraphError


class IsolatedVertexError(GraphError):
    """Bounds are undefined on graphs with isolated vertices."""


@dataclass(frozen=True)
class BoundReport:
    baca_bound: int
    degree_count_bound: int
    best: int
    witness_degree: int


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _require_min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("bounds are undefined on the empty graph")
    delta = g.min_degree
    if delta == 0:
        raise IsolatedVertexError("graph has an isolated vertex")
    return delta


def baca_bound(g: Graph) -> int:
    """``ceil((n + delta) / (Delta + 1))``."""
    delta = _require_min_degree(g)
    return _ceil_div(g.n + delta, g.max_degree + 1)


def degree_count_bound(g: Graph) -> tuple[int, int]:
    """Best per-degree-class counting bound and the degree achieving it.

    For every degree value ``r`` present in the graph, the vertices of
    degree <= r alone force ``ceil((n_le_r + delta) / (r + 1))``; the
    maximum over ``r`` is returned together with the smallest maximizing
    ``r``.  The ``r = Delta`` term equals :func:`baca_bound`.
    """
    delta = _require_min_degree(g)
    degrees = sorted(g.degrees())
    best = 0
    witness = degrees[-1]
    n_le = 0
    i = 0
    for r in sorted(set(degrees)):
        while i < len(degrees) and degrees[i] <= r:
            i += 1
        n_le = i
        term = _ceil_div(n_le + delta, r + 1)
        if term > best:
            best = term
            witness = r
    return best, witness


def bound_report(g: Graph) -> BoundReport:
    dcb, witness = degree_count_bound(g)
    baca = baca_bound(g)
    return BoundReport(
        baca_bound=baca,
        degree_count_bound=dcb,
        best=max(baca, dcb),
        witness_degree=witness,
    )
