"""Bicomplex numbers, finite free modules over them, T-linear operators with
their two norms, constructive Hahn-Banach extension, and a seeded
property-verification harness with a CLI front end."""

from .errors import (
    BicomplexError,
    ComponentInNullDistance,
    DimensionMismatch,
    EmptyCollection,
    InconsistentFunctional,
    NotSquare,
    NullConeVector,
    SingularElement,
    SingularOperator,
    UnknownCheckId,
)
from .functionals import (
    DualityGap,
    ExtensionReport,
    NormingResult,
    RealLinearFunctional,
    SeparationResult,
    TFunctional,
    duality_gap,
    extend_real,
    hahn_banach_extend,
    lift_real,
    norming_functional,
    separating_functional,
)
from .operators import ComplexMatrixPair, NormReport, TMatrix, sampled_sup_norm
from .scalar import (
    DEFAULT_SINGULAR_TOL,
    E1,
    E2,
    IOTA1,
    IOTA2,
    J,
    ONE,
    ZERO,
    Bicomplex,
    Hyperbolic,
    IdempotentForm,
    SingularityReport,
)
from .tmodule import (
    DistanceResult,
    FMetricPoint,
    IdempotentVectorPair,
    Submodule,
    TVector,
    bounded_sup,
    f_metric,
    in_span,
    product_metric,
)
from .verifier import (
    CHECK_IDS,
    CheckConfig,
    CheckReport,
    all_passed,
    default_config,
    replay_witness,
    run_all,
    run_check,
)

__version__ = "0.1.0"

__all__ = [
    "BicomplexError",
    "ComponentInNullDistance",
    "DimensionMismatch",
    "EmptyCollection",
    "InconsistentFunctional",
    "NotSquare",
    "NullConeVector",
    "SingularElement",
    "SingularOperator",
    "UnknownCheckId",
    "DualityGap",
    "ExtensionReport",
    "NormingResult",
    "RealLinearFunctional",
    "SeparationResult",
    "TFunctional",
    "duality_gap",
    "extend_real",
    "hahn_banach_extend",
    "lift_real",
    "norming_functional",
    "separating_functional",
    "ComplexMatrixPair",
    "NormReport",
    "TMatrix",
    "sampled_sup_norm",
    "DEFAULT_SINGULAR_TOL",
    "E1",
    "E2",
    "IOTA1",
    "IOTA2",
    "J",
    "ONE",
    "ZERO",
    "Bicomplex",
    "Hyperbolic",
    "IdempotentForm",
    "SingularityReport",
    "DistanceResult",
    "FMetricPoint",
    "IdempotentVectorPair",
    "Submodule",
    "TVector",
    "bounded_sup",
    "f_metric",
    "in_span",
    "product_metric",
    "CHECK_IDS",
    "CheckConfig",
    "CheckReport",
    "all_passed",
    "default_config",
    "replay_witness",
    "run_all",
    "run_check",
]
