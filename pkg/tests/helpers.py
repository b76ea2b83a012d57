"""Shared test utilities: random instances and brute-force oracles.

The brute-force routines here are deliberately independent of the
library's own algorithms so they can serve as ground truth.
"""

from __future__ import annotations

import itertools
import random

from tvs.graph_core import Graph, build_graph


def random_simple_graph(rng: random.Random, min_n: int = 2, max_n: int = 8) -> Graph:
    """Random simple graph with minimum degree at least 1."""
    n = rng.randint(min_n, max_n)
    while True:
        p = rng.uniform(0.25, 0.9)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        degrees = [0] * n
        for u, v in edges:
            degrees[u] += 1
            degrees[v] += 1
        if all(d >= 1 for d in degrees):
            return build_graph(n, edges)


def brute_force_completion_exists(g: Graph, edge_labels, s: int) -> bool:
    """Exhaustive search over all vertex assignments in [1, s]^n."""
    sums = [sum(edge_labels[i] for i in adj) for adj in g.adjacency]
    for assignment in itertools.product(range(1, s + 1), repeat=g.n):
        weights = [a + b for a, b in zip(sums, assignment)]
        if len(set(weights)) == g.n:
            return True
    return False


def ascending_partitions(total: int, max_parts: int | None = None, smallest: int = 3):
    """All ascending partitions of ``total`` into parts >= ``smallest``."""
    limit = max_parts if max_parts is not None else total
    if total == 0:
        yield ()
        return
    if limit == 0 or total < smallest:
        return
    for first in range(smallest, total + 1):
        for rest in ascending_partitions(total - first, limit - 1, first):
            yield (first,) + rest


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Apply a vertex permutation, keeping edge order."""
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
