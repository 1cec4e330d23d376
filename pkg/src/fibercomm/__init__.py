"""Fibered-face and normalized-entropy invariants of fibered 3-manifolds.

The package computes Thurston norm data from a finite dual-vertex
description, attaches dilatations and normalized entropies to fibration
classes through face polynomials, classifies pairs of fibrations as
symmetric or non-commensurable, and analyzes the cyclic-cover construction
that produces commensurable but non-symmetric fibrations.
"""

from .commensurability import (
    GROUP_BOUND,
    NON_COMMENSURABLE,
    SYMMETRIC,
    UNDETERMINED,
    V0,
    V8,
    VOLUME_MARGIN,
    GateResult,
    ManifoldFlags,
    PairVerdict,
    SymmetryAction,
    apply_word,
    classify_pair,
    symmetry_orbit,
    volume_minimality_gate,
)
from .covers import (
    CoverReport,
    FibrationPair,
    analyze_cover,
    fiber_kernel,
    kernel_image_gcd,
    search_nonsymmetric,
)
from .descriptor import (
    BUNDLED_NAMES,
    ManifoldDescriptor,
    bundled_descriptor,
    face_of,
    load_descriptor,
    parse_descriptor,
    resolve_class,
    resolve_descriptor,
    resolve_face,
)
from .entropy import (
    ENTROPY_TOL,
    ConcavityProbe,
    EntropyRecord,
    concavity_probe,
    dilatation,
    ent_at_face_point,
    invariant_equal,
    normalized_entropy,
    primitive_on_ray,
)
from .errors import (
    ArityMismatch,
    DegenerateNorm,
    DimensionMismatch,
    DomainError,
    HypothesisUnmet,
    MissingPolynomial,
    NoRootAboveOne,
    NotInCone,
    NotOnFace,
    NotPrimitive,
    OrbitOverflow,
    ParseError,
    Unsupported,
    UnboundedCone,
    ValidationError,
    ZeroClass,
    ZeroPolynomial,
)
from .lattice import (
    CohomologyClass,
    IntMatrix,
    SmithDecomposition,
    image_order_mod_n,
    is_primitive,
    kernel_basis,
    smith_normal_form,
)
from .laurent import (
    ROOT_TOL,
    LaurentPolynomial,
    NewtonPolytope,
    UnivariatePoly,
    extreme_points,
    largest_real_root,
    newton_polytope,
    specialize,
)
from .norm import (
    FiberedFace,
    NormBall,
    cone_contains,
    enumerate_primitive_classes,
    evaluate_norm,
    norm_from_newton,
    span_rank,
    top_faces,
)

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "BUNDLED_NAMES",
    "CohomologyClass",
    "ConcavityProbe",
    "CoverReport",
    "DegenerateNorm",
    "DimensionMismatch",
    "DomainError",
    "ENTROPY_TOL",
    "EntropyRecord",
    "FiberedFace",
    "FibrationPair",
    "GROUP_BOUND",
    "GateResult",
    "HypothesisUnmet",
    "IntMatrix",
    "LaurentPolynomial",
    "ManifoldDescriptor",
    "ManifoldFlags",
    "MissingPolynomial",
    "NON_COMMENSURABLE",
    "NewtonPolytope",
    "NoRootAboveOne",
    "NormBall",
    "NotInCone",
    "NotOnFace",
    "NotPrimitive",
    "OrbitOverflow",
    "PairVerdict",
    "ParseError",
    "ROOT_TOL",
    "SYMMETRIC",
    "SmithDecomposition",
    "SymmetryAction",
    "UNDETERMINED",
    "UnboundedCone",
    "UnivariatePoly",
    "Unsupported",
    "V0",
    "V8",
    "VOLUME_MARGIN",
    "ValidationError",
    "ZeroClass",
    "ZeroPolynomial",
    "analyze_cover",
    "apply_word",
    "bundled_descriptor",
    "classify_pair",
    "concavity_probe",
    "cone_contains",
    "dilatation",
    "ent_at_face_point",
    "enumerate_primitive_classes",
    "evaluate_norm",
    "extreme_points",
    "face_of",
    "fiber_kernel",
    "image_order_mod_n",
    "invariant_equal",
    "is_primitive",
    "kernel_basis",
    "kernel_image_gcd",
    "largest_real_root",
    "load_descriptor",
    "newton_polytope",
    "norm_from_newton",
    "normalized_entropy",
    "parse_descriptor",
    "primitive_on_ray",
    "resolve_class",
    "resolve_descriptor",
    "resolve_face",
    "search_nonsymmetric",
    "smith_normal_form",
    "span_rank",
    "specialize",
    "symmetry_orbit",
    "top_faces",
    "volume_minimality_gate",
]
