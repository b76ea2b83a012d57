"""Deterministic generators for the supported graph families.

Every generator fixes a canonical vertex ordering which the labeling
constructors rely on: cycle and path vertices in traversal order, the
prism's outer cycle before the inner one, wheel and helm centers last,
and so on.  The ordering is part of the contract, not an accident of
implementation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import Graph, build_graph

CYCLE = "cycle"
PATH = "path"
PRISM = "prism"
WHEEL = "wheel"
HELM = "helm"
FRIENDSHIP = "friendship"
COMPLETE = "complete"
COMPLETE_BIPARTITE = "complete-bipartite"
TWO_REGULAR = "two-regular"

FAMILY_KINDS = (
    CYCLE,
    PATH,
    PRISM,
    WHEEL,
    HELM,
    FRIENDSHIP,
    COMPLETE,
    COMPLETE_BIPARTITE,
    TWO_REGULAR,
)

_MIN_N = {
    CYCLE: 3,
    PATH: 2,
    PRISM: 3,
    WHEEL: 3,
    HELM: 3,
    FRIENDSHIP: 1,
    COMPLETE: 3,
    COMPLETE_BIPARTITE: 3,
}


class FamilyParameterError(ValueError):
    """A family parameter violates its constraint; names the parameter."""


@dataclass(frozen=True)
class FamilySpec:
    """Tagged choice of graph family plus its size parameter(s).

    ``n`` is the family's size parameter; two-regular graphs take
    ``lengths`` (one entry per cycle component) instead.
    """

    kind: str
    n: int = 0
    lengths: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise FamilyParameterError(f"unknown family kind {self.kind!r}")
        if self.kind == TWO_REGULAR:
            if not self.lengths:
                raise FamilyParameterError("lengths: must be a nonempty list")
            for length in self.lengths:
                if length < 3:
                    raise FamilyParameterError(
                        f"lengths: every cycle length must be >= 3, got {length}"
                    )
        else:
            if self.n < _MIN_N[self.kind]:
                raise FamilyParameterError(
                    f"n: {self.kind} requires n >= {_MIN_N[self.kind]}, got {self.n}"
                )

    @property
    def total_vertices(self) -> int:
        if self.kind == TWO_REGULAR:
            return sum(self.lengths)
        return {
            CYCLE: self.n,
            PATH: self.n,
            PRISM: 2 * self.n,
            WHEEL: self.n + 1,
            HELM: 2 * self.n + 1,
            FRIENDSHIP: 2 * self.n + 1,
            COMPLETE: self.n,
            COMPLETE_BIPARTITE: 2 * self.n,
        }[self.kind]

    def describe(self) -> str:
        if self.kind == TWO_REGULAR:
            return f"{self.kind}[{','.join(map(str, self.lengths))}]"
        return f"{self.kind}({self.n})"


@dataclass(frozen=True)
class VertexRole:
    """Role tag for one vertex: role name, group (component / triangle
    index where applicable), and rank within the role."""

    role: str
    group: int
    rank: int


@dataclass(frozen=True)
class CanonicalOrder:
    roles: tuple[VertexRole, ...]

    def indices_with_role(self, role: str) -> list[int]:
        return [i for i, r in enumerate(self.roles) if r.role == role]


def _cycle_edges(offset: int, length: int) -> list[tuple[int, int]]:
    return [(offset + i, offset + (i + 1) % length) for i in range(length)]


def generate(spec: FamilySpec) -> tuple[Graph, CanonicalOrder]:
    """Build the graph for ``spec`` along with its canonical vertex roles.

    Deterministic: the same spec always yields the same vertex and edge
    order.  Two-regular components are laid out ascending by length
    (stable for equal lengths); each vertex's role records the caller's
    original component index.
    """
    n = spec.n
    if spec.kind == CYCLE:
        edges = _cycle_edges(0, n)
        roles = [VertexRole("cycle", 0, i) for i in range(n)]
    elif spec.kind == PATH:
        edges = [(i, i + 1) for i in range(n - 1)]
        roles = [VertexRole("path", 0, i) for i in range(n)]
    elif spec.kind == PRISM:
        edges = _cycle_edges(0, n) + _cycle_edges(n, n) + [(i, n + i) for i in range(n)]
        roles = [VertexRole("outer", 0, i) for i in range(n)] + [
            VertexRole("inner", 0, i) for i in range(n)
        ]
    elif spec.kind == WHEEL:
        edges = _cycle_edges(0, n) + [(i, n) for i in range(n)]
        roles = [VertexRole("rim", 0, i) for i in range(n)] + [VertexRole("center", 0, 0)]
    elif spec.kind == HELM:
        center = 2 * n
        edges = (
            _cycle_edges(0, n)
            + [(i, center) for i in range(n)]
            + [(i, n + i) for i in range(n)]
        )
        roles = (
            [VertexRole("rim", 0, i) for i in range(n)]
            + [VertexRole("pendant", 0, i) for i in range(n)]
            + [VertexRole("center", 0, 0)]
        )
    elif spec.kind == FRIENDSHIP:
        center = 2 * n
        edges = []
        for t in range(n):
            edges += [(2 * t, center), (2 * t + 1, center), (2 * t, 2 * t + 1)]
        roles = [VertexRole("triangle", t, r) for t in range(n) for r in (0, 1)] + [
            VertexRole("center", 0, 0)
        ]
    elif spec.kind == COMPLETE:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
        roles = [VertexRole("vertex", 0, i) for i in range(n)]
    elif spec.kind == COMPLETE_BIPARTITE:
        edges = [(i, n + j) for i in range(n) for j in range(n)]
        roles = [VertexRole("part_a", 0, i) for i in range(n)] + [
            VertexRole("part_b", 0, i) for i in range(n)
        ]
    else:  # TWO_REGULAR
        order = sorted(range(len(spec.lengths)), key=lambda i: spec.lengths[i])
        edges = []
        roles = []
        offset = 0
        for original in order:
            length = spec.lengths[original]
            edges += _cycle_edges(offset, length)
            roles += [VertexRole("cycle", original, i) for i in range(length)]
            offset += length
        n = offset
    graph = build_graph(spec.total_vertices, edges)
    return graph, CanonicalOrder(tuple(roles))
