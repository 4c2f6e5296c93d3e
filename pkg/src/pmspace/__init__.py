"""Exact computations in finite probabilistic metric spaces.

Distributions are left-continuous step functions on [0, inf) with values
in [0, 1]; distances between points are distributions rather than numbers.
The package provides the exact algebra of such distributions (triangle
functions built from t-norms), the modified Levy metric with certified
bisection brackets, canonical metrization with two-sided bounds,
probabilistic 1-Lipschitz maps, and contraction fixed points with
certified convergence rates.
"""

from ._backend import backend_name
from .distributions import Distribution, heaviside, make_step, pointwise_max
from .errors import (
    EmptySubset,
    IncompatibleTriangleFn,
    InputError,
    InvalidSpace,
    KQTooLarge,
    LevelOutOfRange,
    MissingPoint,
    NegativeLocation,
    NoConvergence,
    NonMonotone,
    NonPositiveH,
    NonPositiveT,
    NotAMetric,
    NotContraction,
    NotLipschitz,
    OutOfRange,
    ParseError,
    PMSpaceError,
    QOutOfRange,
    ShapeMismatch,
    UnknownPoint,
    UnsupportedTriangleFn,
)
from .levy import (
    DEFAULT_BISECT_TOL,
    LevyResult,
    admissible,
    heaviside_distance,
    levy_distance,
    weakly_converges,
)
from .lipschitz import (
    DEFAULT_ASSERT_TOL,
    ContractionCheck,
    EquicontinuityReport,
    FixpointCertificate,
    Lip1Report,
    ProbLipMap,
    SelfMap,
    check_equicontinuity,
    check_limit_closure,
    check_one_lipschitz,
    distance_map,
    is_contraction,
    lipschitz_envelope,
    solve_fixpoint,
    uniform_distance,
)
from .spaces import (
    MetrizationReport,
    PMSpace,
    SpaceReport,
    Violation,
    canonical_metric,
    canonical_metric_matrix,
    induced_from_metric,
    lower_matrix,
    metrization_report,
    neighborhood_matches_ball,
    strong_neighborhood,
    validate,
)
from .triangle import (
    DEFAULT_ORACLE_GRID,
    AxiomReport,
    Kind,
    LipschitzReport,
    OracleReport,
    TNorm,
    TriangleFunction,
    check_axioms,
    check_lipschitz_bound,
    grid_brute_force,
    oracle_check,
    tconorm_eval,
    tnorm_eval,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "backend_name",
    # distributions
    "Distribution",
    "make_step",
    "heaviside",
    "pointwise_max",
    # levy
    "DEFAULT_BISECT_TOL",
    "LevyResult",
    "admissible",
    "levy_distance",
    "heaviside_distance",
    "weakly_converges",
    # triangle
    "DEFAULT_ORACLE_GRID",
    "TNorm",
    "Kind",
    "TriangleFunction",
    "tnorm_eval",
    "tconorm_eval",
    "grid_brute_force",
    "OracleReport",
    "oracle_check",
    "AxiomReport",
    "check_axioms",
    "LipschitzReport",
    "check_lipschitz_bound",
    # spaces
    "PMSpace",
    "Violation",
    "SpaceReport",
    "validate",
    "induced_from_metric",
    "canonical_metric",
    "canonical_metric_matrix",
    "lower_matrix",
    "strong_neighborhood",
    "neighborhood_matches_ball",
    "MetrizationReport",
    "metrization_report",
    # lipschitz
    "DEFAULT_ASSERT_TOL",
    "ProbLipMap",
    "SelfMap",
    "Lip1Report",
    "check_one_lipschitz",
    "distance_map",
    "uniform_distance",
    "lipschitz_envelope",
    "EquicontinuityReport",
    "check_equicontinuity",
    "ContractionCheck",
    "is_contraction",
    "FixpointCertificate",
    "solve_fixpoint",
    "check_limit_closure",
    # errors
    "PMSpaceError",
    "InputError",
    "NonMonotone",
    "NegativeLocation",
    "LevelOutOfRange",
    "NonPositiveH",
    "OutOfRange",
    "NonPositiveT",
    "QOutOfRange",
    "ShapeMismatch",
    "NotAMetric",
    "IncompatibleTriangleFn",
    "UnknownPoint",
    "InvalidSpace",
    "MissingPoint",
    "UnsupportedTriangleFn",
    "EmptySubset",
    "NotLipschitz",
    "NotContraction",
    "KQTooLarge",
    "NoConvergence",
    "ParseError",
]
