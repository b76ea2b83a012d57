"""Search-derived labelings for the sizes the general plans cannot cover.

Wheels with 3 to 6 rim vertices and helms with 3 or 4 were produced once
by running ``oracle.exact_tvs`` on the canonical family graphs and are
frozen here; a regeneration test re-runs the search and asserts it
reproduces these exact witnesses.  Arrays are aligned to the canonical
edge and vertex order of ``families.generate``.
"""

from __future__ import annotations

# (family kind, n) -> (s, edge_labels, vertex_labels)
SMALL_LABELINGS: dict[tuple[str, int], tuple[int, tuple[int, ...], tuple[int, ...]]] = {
    ("wheel", 3): (2, (1, 1, 1, 2, 1, 2), (1, 1, 2, 2)),
    ("wheel", 4): (2, (1, 1, 1, 2, 2, 1, 1, 2), (1, 1, 2, 2, 2)),
    ("wheel", 5): (2, (1, 1, 1, 2, 2, 2, 1, 1, 1, 2), (2, 1, 2, 2, 2, 2)),
    ("wheel", 6): (3, (1, 1, 1, 1, 1, 2, 2, 1, 1, 1, 2, 3), (3, 1, 2, 3, 3, 3, 1)),
    ("helm", 3): (2, (1, 1, 1, 2, 1, 2, 1, 1, 2), (1, 1, 2, 1, 2, 2, 2)),
    ("helm", 4): (3, (1, 1, 1, 1, 2, 1, 1, 3, 1, 1, 1, 2), (3, 2, 3, 2, 1, 2, 3, 3, 3)),
}


def lookup(kind: str, n: int) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    try:
        return SMALL_LABELINGS[(kind, n)]
    except KeyError:
        raise KeyError(f"no stored labeling for {kind}({n})") from None
