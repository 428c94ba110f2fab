"""Exact computations with the symplectic representation, the Boolean algebra
of mod-2 homology, the Birman-Craggs-Johnson homomorphism and the Rohlin
invariant of Torelli gluing words."""

from __future__ import annotations

from .bcj import (
    SigmaUndefined,
    TwoTorsionGroup,
    conjugate_word,
    mixed_bscc,
    mu_x,
    pi0,
    rohlin,
    search_rohlin_nontrivial,
    sigma_spec,
    sigma_word,
    transport,
)
from .boolean import BoolElement, bar, degree, multiply, sp_action, stabilize
from .coinvariants import (
    ActionPresentation,
    CoinvariantResult,
    coinvariants,
    gl_action_on_boolean,
    gl_action_on_lambda3,
    verify_lemma_coinvariants,
)
from .gf2 import F2Matrix, F2Vector, in_span, kernel, rank, row_reduce
from .symplectic import (
    GLMatrix,
    HClass,
    SpMatrix,
    gl_embed,
    is_symplectic,
    omega,
    reduce_mod2,
    transvection_power,
)
from .words import (
    BP,
    BSCC,
    Conj,
    TorelliWord,
    Twist,
    decompose_bp,
    psi_of_word,
    stabilize_word,
    standard_bp,
    standard_bscc,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "ActionPresentation",
    "bar",
    "BoolElement",
    "BP",
    "BSCC",
    "CoinvariantResult",
    "coinvariants",
    "Conj",
    "conjugate_word",
    "decompose_bp",
    "degree",
    "F2Matrix",
    "F2Vector",
    "gl_action_on_boolean",
    "gl_action_on_lambda3",
    "gl_embed",
    "GLMatrix",
    "HClass",
    "in_span",
    "is_symplectic",
    "kernel",
    "mixed_bscc",
    "mu_x",
    "multiply",
    "omega",
    "pi0",
    "psi_of_word",
    "rank",
    "reduce_mod2",
    "rohlin",
    "row_reduce",
    "search_rohlin_nontrivial",
    "sigma_spec",
    "sigma_word",
    "SigmaUndefined",
    "sp_action",
    "SpMatrix",
    "stabilize",
    "stabilize_word",
    "standard_bp",
    "standard_bscc",
    "TorelliWord",
    "transport",
    "transvection_power",
    "Twist",
    "TwoTorsionGroup",
    "validate",
    "verify_lemma_coinvariants",
]
