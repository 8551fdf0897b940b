"""Exact computations around Schubert polynomials, Soergel-type bimodule
filtrations, and the charge lattice of stability conditions on products of
elliptic curves.  All arithmetic is over the rationals; no floating point
appears outside test oracles.
"""

from .bimodule import (
    BimoduleElement,
    GraphTwistEntry,
    change_of_basis_matrix,
    f_map,
    graph_twist_table,
    membership_in_gamma,
    right_multiply,
    s_basis_coordinates,
    s_element,
    verify_bimodule_closure,
    verify_filtration_identity,
    verify_triangular_injectivity,
    verify_unitriangular,
)
from .lattice import (
    ChargeParams,
    ExactComplex,
    LatticeVector,
    central_charge,
    isogeny_pullback,
    isogeny_pushforward,
    rank_deg,
    support_constant,
    twist,
    v_of_line_bundle,
    v_of_point,
    vector_from_rank_deg,
    verify_charge_transforms,
)
from .perms import (
    Permutation,
    canonical_reduced_word,
    product_of_simples,
    reduced_words,
    symmetric_group,
)
from .poly import (
    Poly,
    demazure,
    demazure_along_word,
    divided_difference,
    is_symmetric,
    negate_x,
    permute_x,
    specialize_y_to_x,
    verify_demazure_relations,
)
from .schubert import (
    delta_w,
    double_delta,
    double_schubert,
    double_schubert_expansion,
    expand_in_schubert_basis,
    schubert_poly,
    specialization_check,
    staircase,
)
from .stability import (
    PhasePoint,
    RelationFact,
    SplitSheafP1,
    bayer_shadow_scan,
    compose_relations,
    derive_twist_chain,
    hn_slope_regroup,
    hn_split_p1,
    phase,
    phase_lower_bound,
    replay_twist_chain,
)

__version__ = "0.1.0"

__all__ = [
    "BimoduleElement",
    "ChargeParams",
    "ExactComplex",
    "GraphTwistEntry",
    "LatticeVector",
    "Permutation",
    "PhasePoint",
    "Poly",
    "RelationFact",
    "SplitSheafP1",
    "bayer_shadow_scan",
    "canonical_reduced_word",
    "central_charge",
    "change_of_basis_matrix",
    "compose_relations",
    "delta_w",
    "demazure",
    "demazure_along_word",
    "derive_twist_chain",
    "divided_difference",
    "double_delta",
    "double_schubert",
    "double_schubert_expansion",
    "expand_in_schubert_basis",
    "f_map",
    "graph_twist_table",
    "hn_slope_regroup",
    "hn_split_p1",
    "is_symmetric",
    "isogeny_pullback",
    "isogeny_pushforward",
    "membership_in_gamma",
    "negate_x",
    "permute_x",
    "phase",
    "phase_lower_bound",
    "product_of_simples",
    "rank_deg",
    "reduced_words",
    "replay_twist_chain",
    "right_multiply",
    "s_basis_coordinates",
    "s_element",
    "schubert_poly",
    "specialization_check",
    "specialize_y_to_x",
    "staircase",
    "support_constant",
    "symmetric_group",
    "twist",
    "v_of_line_bundle",
    "v_of_point",
    "vector_from_rank_deg",
    "verify_bimodule_closure",
    "verify_charge_transforms",
    "verify_demazure_relations",
    "verify_filtration_identity",
    "verify_triangular_injectivity",
    "verify_unitriangular",
]
