"""uce-lab: exact homology of matrix Leibniz superalgebras over superdialgebras."""

from .exactlin import (
    GF,
    QQ,
    ZZ,
    GradedFreeModule,
    GradedModuleInvariants,
    RingSpec,
    SparseMat,
    kernel_basis,
    module_iso_check,
    parity_shift,
    snf,
    subquotient_invariants,
)
from .superdialg import (
    SuperDialgebra,
    bracket_ideal,
    bracket_span,
    builtin_dialgebra,
    catalog_names,
    load_dialgebra_file,
    quotient_Dm,
    validate,
)
from .leibniz import LeibnizSuperalgebra, centre, from_dialgebra, gl, is_perfect, sl
from .chain import DEFAULT_SIZE_GUARD, delta, hl
from .tensorsq import hl2, tensor_square, uce, w_cycles
from .hochschild import hhs1, splitting_check
from .theorems import (
    CaseLabel,
    expected_hl2,
    expected_w,
    char_zero_counterexample_check,
    verify_case,
)

__all__ = [
    "RingSpec", "ZZ", "QQ", "GF",
    "SparseMat", "GradedFreeModule", "GradedModuleInvariants",
    "snf", "kernel_basis", "subquotient_invariants",
    "module_iso_check", "parity_shift",
    "SuperDialgebra", "validate", "builtin_dialgebra", "catalog_names",
    "load_dialgebra_file", "bracket_span", "bracket_ideal", "quotient_Dm",
    "LeibnizSuperalgebra", "from_dialgebra", "gl", "sl", "centre", "is_perfect",
    "DEFAULT_SIZE_GUARD", "delta", "hl",
    "tensor_square", "hl2", "uce", "w_cycles",
    "hhs1", "splitting_check",
    "CaseLabel", "expected_w", "expected_hl2", "verify_case",
    "char_zero_counterexample_check",
]
