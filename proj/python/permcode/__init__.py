"""Permutation-code toolkit: contraction calculus, finite-field group
generators, and Hamming-distance bound certificates."""

from ._permcode import (
    FieldSpec,
    Permutation,
    PermutationArray,
    agammal1,
    agl1,
    certify_agl,
    certify_pgl_two_contractions,
    certify_semilinear,
    check_hd_increase_conditions,
    check_multi_contraction_bound,
    classify,
    compose,
    construct_odd_cycle_witness,
    contract,
    contract_array,
    contract_m,
    delta,
    delta_ct,
    fixed_point_count,
    group_min_distance,
    hamming_distance,
    has_no_short_odd_cycle,
    inverse,
    make_array,
    min_hamming_distance,
    parse_permutation,
    pgammal2,
    pgl2,
    predict_decomposition,
    quotient,
    verify_array_contraction_bound,
    verify_size_preservation,
)

__all__ = [
    "FieldSpec",
    "Permutation",
    "PermutationArray",
    "agammal1",
    "agl1",
    "certify_agl",
    "certify_pgl_two_contractions",
    "certify_semilinear",
    "check_hd_increase_conditions",
    "check_multi_contraction_bound",
    "classify",
    "compose",
    "construct_odd_cycle_witness",
    "contract",
    "contract_array",
    "contract_m",
    "delta",
    "delta_ct",
    "fixed_point_count",
    "group_min_distance",
    "hamming_distance",
    "has_no_short_odd_cycle",
    "inverse",
    "make_array",
    "min_hamming_distance",
    "parse_permutation",
    "pgammal2",
    "pgl2",
    "predict_decomposition",
    "quotient",
    "verify_array_contraction_bound",
    "verify_size_preservation",
]
