"""Total vertex irregularity strength toolkit.

Constructs provably optimal irregular total labelings for nine graph
families, computes counting lower bounds, verifies arbitrary labelings,
and cross-checks everything against an exact search oracle at small
scale.
"""

from .bounds import BoundReport, baca_bound, bound_report, degree_count_bound
from .constructors import (
    ConstructionCertificate,
    ConstructionError,
    SegmentPlan,
    TriangleType,
    construct,
    construct_complete,
    construct_complete_bipartite,
    construct_cycle,
    construct_friendship,
    construct_helm,
    construct_path,
    construct_prism,
    construct_two_regular,
    construct_wheel,
    greedy_vertex_completion,
    tvs_formula,
)
from .families import CanonicalOrder, FamilyParameterError, FamilySpec, VertexRole, generate
from .graph_core import (
    Graph,
    SumDistribution,
    TotalLabeling,
    VerificationReport,
    WeightProfile,
    build_graph,
    sum_distribution,
    verify,
    weight_profile,
)
from .oracle import OracleResult, SearchBudget, exact_tvs, feasible_at

__all__ = [
    "BoundReport",
    "CanonicalOrder",
    "ConstructionCertificate",
    "ConstructionError",
    "FamilyParameterError",
    "FamilySpec",
    "Graph",
    "OracleResult",
    "SearchBudget",
    "SegmentPlan",
    "SumDistribution",
    "TotalLabeling",
    "TriangleType",
    "VerificationReport",
    "VertexRole",
    "WeightProfile",
    "baca_bound",
    "bound_report",
    "build_graph",
    "construct",
    "construct_complete",
    "construct_complete_bipartite",
    "construct_cycle",
    "construct_friendship",
    "construct_helm",
    "construct_path",
    "construct_prism",
    "construct_two_regular",
    "construct_wheel",
    "degree_count_bound",
    "exact_tvs",
    "feasible_at",
    "generate",
    "greedy_vertex_completion",
    "sum_distribution",
    "tvs_formula",
    "verify",
    "weight_profile",
]
