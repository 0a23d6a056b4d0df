"""Exact convex-polytope metrics under polyhedral Minkowski norms.

Everything runs over the rationals: vertices, facet data, LP pivots,
distances.  There is no floating point anywhere in the package, so every
equality test in a report is a genuine identity rather than a tolerance
check.
"""

from .completeness import (
    CompletenessReport,
    ReductionWitness,
    ball_hull,
    is_complete,
    search_reduction_witness,
    verify_reduction_witness,
    vertex_diameter_realization,
)
from .constructions import (
    ClaimsReport,
    PropositionReport,
    tetrahedron_k,
    verify_claims_dim3,
    verify_proposition,
    walsh_simplex,
)
from .errors import (
    DegenerateBody,
    DimensionMismatch,
    EmptyIntersection,
    GeometryError,
    OriginNotInterior,
    SizeLimitExceeded,
    UnboundedRegion,
)
from .lp import INFEASIBLE, OPTIMAL, UNBOUNDED, LpOutcome, LpProblem, lp_max
from .metrics import MetricsReport, diameter, inball_scale, metrics_report, thickness, width
from .norms import (
    BALL_MAX_DIM,
    PolytopalNorm,
    custom_ball,
    dual_support,
    l1_ball,
    linf_ball,
    norm,
    parallel_hyperplane_distance,
    point_hyperplane_distance,
)
from .polytope import (
    Halfspace,
    HPolytope,
    VPolytope,
    body_from_obj,
    body_to_obj,
    cut_simplex,
    difference_body,
    extreme_points,
    facets_of,
    halfspace,
    halfspace_from_obj,
    halfspace_to_obj,
    hull_facets,
    is_subset,
    simplex_hrep,
    support,
)
from .walsh import is_hadamard, walsh_matrix

__version__ = "0.1.0"

__all__ = [
    "BALL_MAX_DIM",
    "ClaimsReport",
    "CompletenessReport",
    "DegenerateBody",
    "DimensionMismatch",
    "EmptyIntersection",
    "GeometryError",
    "HPolytope",
    "Halfspace",
    "INFEASIBLE",
    "LpOutcome",
    "LpProblem",
    "MetricsReport",
    "OPTIMAL",
    "OriginNotInterior",
    "PolytopalNorm",
    "PropositionReport",
    "ReductionWitness",
    "SizeLimitExceeded",
    "UNBOUNDED",
    "UnboundedRegion",
    "VPolytope",
    "ball_hull",
    "body_from_obj",
    "body_to_obj",
    "custom_ball",
    "cut_simplex",
    "diameter",
    "difference_body",
    "dual_support",
    "extreme_points",
    "facets_of",
    "halfspace",
    "halfspace_from_obj",
    "halfspace_to_obj",
    "hull_facets",
    "inball_scale",
    "is_complete",
    "is_hadamard",
    "is_subset",
    "l1_ball",
    "linf_ball",
    "lp_max",
    "metrics_report",
    "norm",
    "parallel_hyperplane_distance",
    "point_hyperplane_distance",
    "search_reduction_witness",
    "simplex_hrep",
    "support",
    "tetrahedron_k",
    "thickness",
    "verify_claims_dim3",
    "verify_proposition",
    "verify_reduction_witness",
    "vertex_diameter_realization",
    "walsh_matrix",
    "walsh_simplex",
    "width",
]
