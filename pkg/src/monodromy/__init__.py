"""Braid factorizations of the full twist, monodromy representations and branched covers."""

from .braid import (
    BraidError,
    BraidWord,
    Permutation,
    canonical_form,
    compose,
    exponent_sum,
    format_braid,
    full_twist,
    group_equal,
    invert,
    parse_braid_text,
    permutation_image,
)
from .cover import CoverModel, SymplecticAction, build_cover, lift_action, pencil_monodromy_check, vanishing_class
from .factorization import (
    BraidFactorization,
    Factor,
    FactorizationError,
    cancel_pair,
    census,
    create_pair,
    global_conjugate,
    hurwitz_move,
    smooth_curve_factorization,
    underlying_braid,
    validate,
)
from .freegroup import FreeWord, act_is_automorphism_check, artin_act, free_reduce
from .induction import LinearSystemData, derive_theta2_shadow, validate_chain
from .report import ValidationReport
from .representation import (
    MonodromyRep,
    check_compatibility,
    evaluate,
    is_liftable,
    liftability_of_factorization,
    validate_rep,
)
from .search import SearchBudget, SearchResult, equivalence_search
from .van_kampen import (
    AbelianInvariants,
    GroupPresentation,
    abelianization,
    presentation_from_factorization,
    tietze_simplify,
)

__all__ = [
    "BraidError",
    "BraidWord",
    "Permutation",
    "canonical_form",
    "compose",
    "exponent_sum",
    "format_braid",
    "full_twist",
    "group_equal",
    "invert",
    "parse_braid_text",
    "permutation_image",
    "CoverModel",
    "SymplecticAction",
    "build_cover",
    "lift_action",
    "pencil_monodromy_check",
    "vanishing_class",
    "BraidFactorization",
    "Factor",
    "FactorizationError",
    "cancel_pair",
    "census",
    "create_pair",
    "global_conjugate",
    "hurwitz_move",
    "smooth_curve_factorization",
    "underlying_braid",
    "validate",
    "FreeWord",
    "act_is_automorphism_check",
    "artin_act",
    "free_reduce",
    "LinearSystemData",
    "derive_theta2_shadow",
    "validate_chain",
    "ValidationReport",
    "MonodromyRep",
    "check_compatibility",
    "evaluate",
    "is_liftable",
    "liftability_of_factorization",
    "validate_rep",
    "SearchBudget",
    "SearchResult",
    "equivalence_search",
    "AbelianInvariants",
    "GroupPresentation",
    "abelianization",
    "presentation_from_factorization",
    "tietze_simplify",
]

__version__ = "0.1.0"
