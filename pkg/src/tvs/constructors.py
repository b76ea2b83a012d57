"""Optimal irregular labelings for the supported families.

Every constructor follows the same two-phase recipe: first lay down an
edge labeling that uses only the values 1 and ``s`` and hits a target
distribution of vertex sums, then complete the vertex labels greedily.
The greedy completion is exact (see :func:`greedy_vertex_completion`),
so a constructor succeeds exactly when its edge phase leaves a
completable sum distribution -- which the per-family plans guarantee.

Small wheels (n <= 6) and helms (n <= 4) fall outside the general
plans; those ship as search-derived fixtures (see ``fixtures.py``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import fixtures
from .families import (
    COMPLETE,
    COMPLETE_BIPARTITE,
    CYCLE,
    FRIENDSHIP,
    HELM,
    PATH,
    PRISM,
    TWO_REGULAR,
    WHEEL,
    FamilySpec,
    generate,
)
from .graph_core import (
    Graph,
    SumDistribution,
    TotalLabeling,
    sum_distribution,
    verify,
    vertex_sums,
)


class ConstructionError(RuntimeError):
    """A constructor produced an edge labeling it could not complete."""


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def tvs_formula(spec: FamilySpec) -> int:
    """Closed-form total vertex irregularity strength for ``spec``.

    The two-vertex path is degenerate (its maximum degree is 1, so the
    usual ceil((n+1)/3) formula does not apply); its true value is 2.
    """
    n = spec.n
    if spec.kind == CYCLE:
        return _ceil_div(n + 2, 3)
    if spec.kind == PATH:
        return 2 if n == 2 else _ceil_div(n + 1, 3)
    if spec.kind == PRISM:
        return _ceil_div(n, 2) + 1
    if spec.kind == WHEEL:
        return _ceil_div(n + 3, 4)
    if spec.kind == HELM:
        return _ceil_div(n + 1, 2)
    if spec.kind == FRIENDSHIP:
        return _ceil_div(2 * n + 2, 3)
    if spec.kind == COMPLETE:
        return 2
    if spec.kind == COMPLETE_BIPARTITE:
        return 3
    return _ceil_div(sum(spec.lengths) + 2, 3)


@dataclass(frozen=True)
class SegmentPlan:
    """Walk segmentation: ``a`` leading 1-edges, ``2b`` alternating
    (s, 1) edges, ``c`` trailing s-edges."""

    a: int
    b: int
    c: int

    def check_cycle(self, n: int) -> "SegmentPlan":
        if not (self.a >= 1 and self.c >= 1 and self.b >= 0):
            raise ConstructionError(f"invalid cycle segment plan {self}")
        if self.a + 2 * self.b + self.c != n:
            raise ConstructionError(f"segment plan {self} does not cover {n} edges")
        return self

    def check_path(self, n: int) -> "SegmentPlan":
        if not (self.a >= 1 and self.c >= 1 and self.b >= 0):
            raise ConstructionError(f"invalid path segment plan {self}")
        if self.a + 2 * self.b + self.c != n - 1:
            raise ConstructionError(f"segment plan {self} does not cover {n - 1} edges")
        return self

    def labels(self, s: int) -> list[int]:
        """Edge labels along the walk."""
        alternating = [s if j % 2 == 0 else 1 for j in range(2 * self.b)]
        return [1] * self.a + alternating + [s] * self.c


def cycle_segment_plan(n: int, s: int) -> SegmentPlan:
    """Segments giving sum distribution (s-1, s, n+1-2s) for even ``s``
    and (s, s-1, n+1-2s) for odd ``s``."""
    if s % 2 == 0:
        a, b = s, (s - 2) // 2
    else:
        a, b = s + 1, (s - 3) // 2
    return SegmentPlan(a, b, n - a - 2 * b).check_cycle(n)


def path_segment_plan(n: int, s: int) -> SegmentPlan:
    """Segments giving merged end classes (s-1, s, n+1-2s) for even
    ``s`` and (s, s-1, n+1-2s) for odd ``s``."""
    if s % 2 == 0:
        a, b = s - 1, (s - 2) // 2
    else:
        a, b = s, (s - 3) // 2
    return SegmentPlan(a, b, (n - 1) - a - 2 * b).check_path(n)


class TriangleType(enum.Enum):
    """Edge patterns on one friendship triangle (two spokes, one base).

    Type I puts 1 on all three edges, type II puts ``s`` on both spokes
    and 1 on the base, type III puts ``s`` everywhere; the two
    non-central vertices then land in the sum classes 2, s+1, and 2s
    respectively.
    """

    I = (1, 1, 1)
    II = ("s", "s", 1)
    III = ("s", "s", "s")

    def labels(self, s: int) -> tuple[int, int, int]:
        return tuple(s if x == "s" else x for x in self.value)


@dataclass(frozen=True)
class ConstructionCertificate:
    labeling: TotalLabeling
    claimed_s: int
    family: FamilySpec
    distribution_before_vertex_labels: SumDistribution


def greedy_vertex_completion(g: Graph, edge_labels, s: int) -> TotalLabeling | None:
    """Extend an edge labeling to an irregular total labeling, if possible.

    Vertices are processed ascending by vertex sum (ties by index); each
    receives the smallest weight exceeding the previous one and its own
    sum.  Because every vertex's admissible weight window has the same
    width ``s``, this greedy order is exact: it succeeds whenever any
    vertex assignment with labels at most ``s`` would.  Returns None when
    some implied label would exceed ``s``.
    """
    if any(not 1 <= x <= s for x in edge_labels):
        raise ConstructionError(f"edge labels must lie in [1, {s}]")
    sums = vertex_sums(g, edge_labels)
    labels = [0] * g.n
    prev = 0
    for v in sorted(range(g.n), key=lambda v: (sums[v], v)):
        weight = max(prev + 1, sums[v] + 1)
        if weight > sums[v] + s:
            return None
        labels[v] = weight - sums[v]
        prev = weight
    return TotalLabeling.of(labels, edge_labels, s)


def _certify(
    spec: FamilySpec, g: Graph, edge_labels: list[int], s: int, check: bool
) -> ConstructionCertificate:
    labeling = greedy_vertex_completion(g, edge_labels, s)
    if labeling is None:
        raise ConstructionError(
            f"edge labeling for {spec.describe()} is not completable at s={s}"
        )
    cert = ConstructionCertificate(
        labeling=labeling,
        claimed_s=s,
        family=spec,
        distribution_before_vertex_labels=sum_distribution(g, edge_labels),
    )
    if check:
        report = verify(g, labeling)
        if not report.is_irregular or report.max_label_used > s:
            raise ConstructionError(
                f"certificate check failed for {spec.describe()}: {report}"
            )
    return cert


def _fixture_certificate(spec: FamilySpec, check: bool) -> ConstructionCertificate:
    g, _ = generate(spec)
    s, edge_labels, vertex_labels = fixtures.lookup(spec.kind, spec.n)
    labeling = TotalLabeling.of(vertex_labels, edge_labels, s)
    cert = ConstructionCertificate(
        labeling=labeling,
        claimed_s=s,
        family=spec,
        distribution_before_vertex_labels=sum_distribution(g, edge_labels),
    )
    if check:
        report = verify(g, labeling)
        if not report.is_irregular or report.max_label_used > s:
            raise ConstructionError(f"fixture for {spec.describe()} failed: {report}")
    return cert


def construct_cycle(n: int, check: bool = True) -> ConstructionCertificate:
    """Irregular labeling of the n-cycle with maximum label ceil((n+2)/3).

    Weights cover exactly [3, n+2].
    """
    spec = FamilySpec(CYCLE, n)
    g, _ = generate(spec)
    s = tvs_formula(spec)
    edge_labels = cycle_segment_plan(n, s).labels(s)
    return _certify(spec, g, edge_labels, s, check)


def construct_path(n: int, check: bool = True) -> ConstructionCertificate:
    """Irregular labeling of the n-vertex path; weights cover [2, n+1]."""
    spec = FamilySpec(PATH, n)
    g, _ = generate(spec)
    s = tvs_formula(spec)
    if n == 2:
        edge_labels = [1]
    else:
        edge_labels = path_segment_plan(n, s).labels(s)
    return _certify(spec, g, edge_labels, s, check)


def construct_prism(n: int, check: bool = True) -> ConstructionCertificate:
    """Irregular labeling of the prism (two n-cycles plus a matching).

    Outer cycle edges get 1, inner cycle edges get ``s``, and of the n
    rungs the first s-1 get 1.  Weights split into [4, n+3] and
    [2s+2, n+2s+1] with a gap in between.
    """
    spec = FamilySpec(PRISM, n)
    g, _ = generate(spec)
    s = tvs_formula(spec)
    rungs = [1 if i < s - 1 else s for i in range(n)]
    edge_labels = [1] * n + [s] * n + rungs
    return _certify(spec, g, edge_labels, s, check)


def construct_wheel(n: int, check: bool = True) -> ConstructionCertificate:
    """Irregular labeling of the wheel with maximum label ceil((n+3)/4).

    For n >= 7 the rim is segmented so its sum classes have sizes
    (n+2-3s, 2s-2, s); spokes send the 2-sum rim vertices to 3, the
    2s-sum ones to 3s, and split the (s+1)-sum ones evenly between s+2
    and 2s+1.  The rim class sizes force n+2 >= 3s, which fails for
    n <= 6; those sizes use stored fixtures.
    """
    spec = FamilySpec(WHEEL, n)
    if n <= 6:
        return _fixture_certificate(spec, check)
    g, _ = generate(spec)
    s = tvs_formula(spec)
    plan = SegmentPlan(n + 3 - 3 * s, s - 2, s + 1).check_cycle(n)
    rim = plan.labels(s)
    rim_sums = [rim[(i - 1) % n] + rim[i] for i in range(n)]
    spokes = [0] * n
    mid_seen = 0
    for i in range(n):
        if rim_sums[i] == 2:
            spokes[i] = 1
        elif rim_sums[i] == 2 * s:
            spokes[i] = s
        else:
            spokes[i] = 1 if mid_seen < s - 1 else s
            mid_seen += 1
    return _certify(spec, g, rim + spokes, s, check)


def construct_helm(n: int, check: bool = True) -> ConstructionCertificate:
    """Irregular labeling of the helm with maximum label ceil((n+1)/2).

    The s pendant edges labeled 1 hang off rim vertices 0..s-1; every
    other edge gets ``s``.  Non-center weights cover
    [2, n+1] plus [3s+2, n+1+3s].  n in {3, 4} uses stored fixtures.
    """
    spec = FamilySpec(HELM, n)
    if n <= 4:
        return _fixture_certificate(spec, check)
    g, _ = generate(spec)
    s = tvs_formula(spec)
    pendants = [1 if i < s else s for i in range(n)]
    edge_labels = [s] * n + [s] * n + pendants
    return _certify(spec, g, edge_labels, s, check)


def _friendship_type_counts(n: int, s: int) -> tuple[int, int, int]:
    """Triangle multiplicities (type I, II, III) for the friendship graph.

    Even s: s/2 type I and s/2 - 1 type II give non-center sum classes
    (s, s-2, 2n+2-2s).  Odd s: (s-1)/2 of each give (s-1, s-1, 2n+2-2s).
    """
    if s % 2 == 0:
        ones, twos = s // 2, s // 2 - 1
    else:
        ones, twos = (s - 1) // 2, (s - 1) // 2
    threes = n - ones - twos
    if threes < 0:
        raise ConstructionError(f"friendship type counts infeasible for n={n}")
    return ones, twos, threes


def construct_friendship(n: int, check: bool = True) -> ConstructionCertificate:
    """Irregular labeling of n triangles glued at a center vertex.

    Maximum label ceil((2n+2)/3); non-center weights cover [3, 2n+2]
    and the center exceeds them all.  The single triangle is a 3-cycle
    and reuses the cycle segments along its triangle walk.
    """
    spec = FamilySpec(FRIENDSHIP, n)
    g, _ = generate(spec)
    s = tvs_formula(spec)
    if n == 1:
        walk = [(0, 1), (1, 2), (2, 0)]
        walk_labels = cycle_segment_plan(3, s).labels(s)
        index_of = {frozenset(e): i for i, e in enumerate(g.edges)}
        edge_labels = [0] * 3
        for pair, label in zip(walk, walk_labels):
            edge_labels[index_of[frozenset(pair)]] = label
        return _certify(spec, g, edge_labels, s, check)
    ones, twos, _ = _friendship_type_counts(n, s)
    edge_labels: list[int] = []
    for t in range(n):
        if t < ones:
            kind = TriangleType.I
        elif t < ones + twos:
            kind = TriangleType.II
        else:
            kind = TriangleType.III
        edge_labels.extend(kind.labels(s))
    return _certify(spec, g, edge_labels, s, check)


def construct_complete(n: int, check: bool = True) -> ConstructionCertificate:
    """Irregular labeling of the complete graph with maximum label 2.

    Edge {u, v} (1-indexed i, j) gets 1 when i + j <= n + 1, else 2;
    weights come out as the exact interval [n, 2n-1].
    """
    spec = FamilySpec(COMPLETE, n)
    g, _ = generate(spec)
    edge_labels = [1 if (u + 1) + (v + 1) <= n + 1 else 2 for u, v in g.edges]
    return _certify(spec, g, edge_labels, 2, check)


def construct_complete_bipartite(n: int, check: bool = True) -> ConstructionCertificate:
    """Irregular labeling of the balanced complete bipartite graph.

    Edge (v_i, w_j) (1-indexed) gets 1 when i + j <= n + 1, else 3;
    maximum label 3 and weights exactly [n+1, 3n].
    """
    spec = FamilySpec(COMPLETE_BIPARTITE, n)
    g, _ = generate(spec)
    edge_labels = [
        1 if (u + 1) + (v - n + 1) <= n + 1 else 3 for u, v in g.edges
    ]
    return _certify(spec, g, edge_labels, 3, check)


def _two_regular_edge_labels(lengths: list[int], s: int) -> list[list[int]]:
    """Per-component walk labels hitting the cycle-style distribution.

    Targets (sum-2 count, sum-(s+1) count) = (s, s-1) for odd ``s`` and
    (s-1, s) for even ``s``; everything else sums to 2s.  Components
    must be ascending by length.
    """
    m = len(lengths)
    target_twos = s if s % 2 == 1 else s - 1
    target_mids = s - 1 if s % 2 == 1 else s
    labels: list[list[int] | None] = [None] * m

    # Ones phase: whole small cycles, then a partial run in the next one.
    cum = 0
    k = 0
    while k < m and cum + lengths[k] <= target_twos:
        labels[k] = [1] * lengths[k]
        cum += lengths[k]
        k += 1
    if k >= m:
        raise ConstructionError("ones phase consumed every component")
    a = target_twos - cum
    need_mids = target_mids
    prefix: dict[int, int] = {}
    if a > 0:
        if lengths[k] >= a + 2:
            prefix[k] = a + 1
        else:
            # Component of length a+1: a ones and one s yield only a-1
            # sum-2 vertices; recover the last one in the next component.
            labels[k] = [1] * a + [s]
            need_mids -= 2
            k += 1
            if k >= m:
                raise ConstructionError("no component left for the final 1-run")
            prefix[k] = 2

    # Alternation phase: even contributions until the mid target is met.
    for comp in range(k, m):
        length = lengths[comp]
        if labels[comp] is not None:
            continue
        p = prefix.get(comp, 0)
        if p:
            cap = 2 * ((length - p - 1) // 2) + 2
            contrib = min(need_mids, cap)
            two_b = contrib - 2
        elif need_mids >= length and length % 2 == 0:
            contrib = two_b = length
        else:
            cap = length - 1 if length % 2 == 1 else length - 2
            contrib = two_b = min(need_mids, cap)
        alternating = [s if j % 2 == 0 else 1 for j in range(two_b)]
        labels[comp] = [1] * p + alternating + [s] * (length - p - two_b)
        need_mids -= contrib
    if need_mids != 0:
        raise ConstructionError(f"alternation phase left {need_mids} unplaced")
    return labels


def construct_two_regular(
    cycle_lengths, check: bool = True
) -> ConstructionCertificate:
    """Irregular labeling of a disjoint union of cycles.

    Maximum label s = ceil((n+2)/3) where n is the total order; the
    single-cycle case is exactly the cycle construction.  Weights cover
    [3, n+2].
    """
    spec = FamilySpec(TWO_REGULAR, lengths=tuple(cycle_lengths))
    g, _ = generate(spec)
    s = tvs_formula(spec)
    ordered = sorted(spec.lengths)
    if len(ordered) == 1:
        per_component = [cycle_segment_plan(ordered[0], s).labels(s)]
    else:
        per_component = _two_regular_edge_labels(ordered, s)
    edge_labels = [label for comp in per_component for label in comp]
    return _certify(spec, g, edge_labels, s, check)


_CONSTRUCTORS = {
    CYCLE: construct_cycle,
    PATH: construct_path,
    PRISM: construct_prism,
    WHEEL: construct_wheel,
    HELM: construct_helm,
    FRIENDSHIP: construct_friendship,
    COMPLETE: construct_complete,
    COMPLETE_BIPARTITE: construct_complete_bipartite,
}


def construct(spec: FamilySpec, check: bool = True) -> ConstructionCertificate:
    """Dispatch to the family-specific constructor."""
    if spec.kind == TWO_REGULAR:
        return construct_two_regular(spec.lengths, check=check)
    return _CONSTRUCTORS[spec.kind](spec.n, check=check)
