"""Real Bott manifolds: cohomology-ring classification and fundamental-group checks."""

from ._core import (
    BottMatrix,
    RealBottError,
    __version__,
    classify,
    commutation_relations_hold,
    enumerate_all,
    evaluate,
    extension_cocycle,
    find_isomorphism,
    freeness_check,
    h2_of_character,
    is_isomorphism,
    is_normal_form,
    is_orientable,
    isomorphism_necessary_conditions,
    normal_form,
    permutation_orbit,
    rho_check,
    run_cli,
    type_signature,
    verify_appendix,
    word_multiply,
)

__all__ = [
    "BottMatrix",
    "RealBottError",
    "__version__",
    "classify",
    "commutation_relations_hold",
    "enumerate_all",
    "evaluate",
    "extension_cocycle",
    "find_isomorphism",
    "freeness_check",
    "h2_of_character",
    "is_isomorphism",
    "is_normal_form",
    "is_orientable",
    "isomorphism_necessary_conditions",
    "normal_form",
    "permutation_orbit",
    "rho_check",
    "run_cli",
    "type_signature",
    "verify_appendix",
    "word_multiply",
]
