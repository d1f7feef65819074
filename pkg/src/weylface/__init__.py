"""Weight polyhedra of simple and generalized Verma modules, their faces and weak faces."""

from .faces import (
    CanonicalFace,
    FaceDescriptor,
    TheoremViolation,
    enumerate_faces,
    face_center,
    face_from_descriptor,
    face_weights,
    faces_equal,
    gvm_hull,
    maximizer_face,
    solve_center_system,
    truncation_is_proper,
)
from .lie import CartanType, RootSystem, WeylWord, apply_weyl, build_root_system, dominant_representative
from .lp import LPProblem, LPResult, check_certificate, lp_solve
from .polyhedra import (
    LinearFunctional,
    VPolyhedron,
    cone_contains,
    conv_contains,
    extremal_rays,
    is_face,
    lp_faces,
    maximizer_subset,
    relint_contains,
    vertices,
)
from .weakface import WeakFaceVerdict, enumerate_weak_faces, is_positive_weak_face, is_weak_face, verify_T2, verify_T32
from .weights import (
    GVMWeights,
    HypothesisError,
    WeightSet,
    finite_part_weights,
    gvm_contains,
    gvm_weights,
    rho,
    simple_module_weights,
    truncated_weights,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalFace",
    "CartanType",
    "FaceDescriptor",
    "GVMWeights",
    "HypothesisError",
    "LPProblem",
    "LPResult",
    "LinearFunctional",
    "RootSystem",
    "TheoremViolation",
    "VPolyhedron",
    "WeakFaceVerdict",
    "WeightSet",
    "WeylWord",
    "apply_weyl",
    "build_root_system",
    "check_certificate",
    "cone_contains",
    "conv_contains",
    "dominant_representative",
    "enumerate_faces",
    "enumerate_weak_faces",
    "extremal_rays",
    "face_center",
    "face_from_descriptor",
    "face_weights",
    "faces_equal",
    "finite_part_weights",
    "gvm_contains",
    "gvm_hull",
    "gvm_weights",
    "is_face",
    "is_positive_weak_face",
    "is_weak_face",
    "lp_faces",
    "lp_solve",
    "maximizer_face",
    "maximizer_subset",
    "relint_contains",
    "rho",
    "simple_module_weights",
    "solve_center_system",
    "truncated_weights",
    "truncation_is_proper",
    "verify_T2",
    "verify_T32",
    "vertices",
]
