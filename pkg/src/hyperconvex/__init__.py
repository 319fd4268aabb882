"""Computable convex geometry: projections, set metrics, and charts.

The package works with three representable families of nonempty closed
convex sets in R^n: polytopes given by generators, flats (affine
subspaces), and linear subspaces.  On top of exact projection operators it
provides certified interval estimates for hyperspace metrics (Hausdorff on
truncations, gap between subspaces, and a localized-convergence metric),
chart parametrizations of flats and convex bodies near a reference
subspace, and quantitative affine-independence certificates with an
adversarial stress harness.
"""

from .config import ToleranceConfig, default_tolerances
from .errors import (
    ChartDomainError,
    ConvergenceError,
    DimensionMismatchError,
    EmptyIntersectionError,
    HyperconvexError,
    SchemaError,
)
from .sets import (
    ConvexSet,
    Flat,
    Polytope,
    Subspace,
    affine_hull,
    dimension,
    minkowski_sum,
    translate,
    zero_subspace,
)
from .projection import (
    contains,
    distance_evaluator,
    metric_projection,
    min_norm_point,
    nearest_point,
    project_hyperplane,
    truncated_distance,
    truncated_distance_evaluator,
)
from .intervals import Interval
from .hypermetrics import (
    AWParams,
    attouch_wets,
    aw_origin,
    hausdorff,
    sup_distance_gap,
    truncated_hausdorff,
)
from .grassmann import (
    chart_flat,
    chart_flat_inv,
    gap,
    gap_direct,
    in_chart_domain,
    lift_point,
    orthogonal_complement,
    orthonormal_basis,
    parallel_subspace,
    projection_matrix,
)
from .bundle import ChartTriple, base_map, chart_convex, chart_convex_inv, lift_set
from .independence import (
    adversarial_independence_check,
    barycentric_coordinates,
    in_relative_interior,
    independence_radius,
    is_affinely_independent,
)
from .report import Report
from .serialization import dumps_set, parse_set, serialize_set
from .generators import random_instance
from .suites import SUITE_NAMES, run_suite

__version__ = "0.1.0"

__all__ = [
    "AWParams",
    "ChartDomainError",
    "ChartTriple",
    "ConvergenceError",
    "ConvexSet",
    "DimensionMismatchError",
    "EmptyIntersectionError",
    "Flat",
    "HyperconvexError",
    "Interval",
    "Polytope",
    "Report",
    "SUITE_NAMES",
    "SchemaError",
    "Subspace",
    "ToleranceConfig",
    "adversarial_independence_check",
    "affine_hull",
    "attouch_wets",
    "aw_origin",
    "barycentric_coordinates",
    "base_map",
    "chart_convex",
    "chart_convex_inv",
    "chart_flat",
    "chart_flat_inv",
    "contains",
    "default_tolerances",
    "dimension",
    "distance_evaluator",
    "dumps_set",
    "gap",
    "gap_direct",
    "hausdorff",
    "in_chart_domain",
    "in_relative_interior",
    "independence_radius",
    "is_affinely_independent",
    "lift_point",
    "lift_set",
    "metric_projection",
    "min_norm_point",
    "minkowski_sum",
    "nearest_point",
    "orthogonal_complement",
    "orthonormal_basis",
    "parallel_subspace",
    "parse_set",
    "project_hyperplane",
    "projection_matrix",
    "random_instance",
    "run_suite",
    "serialize_set",
    "sup_distance_gap",
    "translate",
    "truncated_distance",
    "truncated_distance_evaluator",
    "truncated_hausdorff",
    "zero_subspace",
]
