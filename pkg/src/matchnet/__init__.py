"""Exact reliability analysis of matchstick minimal networks."""

from .caps import CapExceededError
from .compare import (
    EQ,
    GE,
    INCOMPARABLE,
    LE,
    ComparisonResult,
    compare_on_unit_interval,
    strictly_below,
)
from .networks import (
    MMN,
    compose,
    count_mmns,
    count_mmns_of_size,
    dual,
    enumerate_mmns,
    enumerate_mmns_of_size,
    graph_realization,
    hammock,
    leq_M,
    mmn_from_matrix,
    mmn_from_word,
    pos,
    single_device,
    sop,
    two_in_parallel,
    two_in_series,
)
from .oracle import KERNEL, brute_force_poly, brute_force_rel, dual_reliability_check
from .polynomials import (
    NForm,
    Poly,
    base_parallel,
    base_series,
    compose_rel,
    nform_dominates,
    nform_to_standard,
    standard_to_nform,
)
from .posets import (
    Poset,
    antichain_at_rank,
    asymptotic_middle_ratio,
    build_poset,
    dilworth_number,
    incomparable_pairs,
    max_chain,
    middle_element,
    middle_maxima,
    middle_rank_indices,
    rank_profile,
    square_middle_stats,
    total_rank,
)
from .words import Word, all_words, dual_word, leq_H, leq_S, leq_SH, rank

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "ComparisonResult",
    "EQ",
    "GE",
    "INCOMPARABLE",
    "KERNEL",
    "LE",
    "MMN",
    "NForm",
    "Poly",
    "Poset",
    "Word",
    "all_words",
    "antichain_at_rank",
    "asymptotic_middle_ratio",
    "base_parallel",
    "base_series",
    "brute_force_poly",
    "brute_force_rel",
    "build_poset",
    "compare_on_unit_interval",
    "compose",
    "compose_rel",
    "count_mmns",
    "count_mmns_of_size",
    "dilworth_number",
    "dual",
    "dual_reliability_check",
    "dual_word",
    "enumerate_mmns",
    "enumerate_mmns_of_size",
    "graph_realization",
    "hammock",
    "incomparable_pairs",
    "leq_H",
    "leq_M",
    "leq_S",
    "leq_SH",
    "max_chain",
    "middle_element",
    "middle_maxima",
    "middle_rank_indices",
    "mmn_from_matrix",
    "mmn_from_word",
    "nform_dominates",
    "nform_to_standard",
    "pos",
    "rank",
    "rank_profile",
    "single_device",
    "sop",
    "square_middle_stats",
    "standard_to_nform",
    "strictly_below",
    "total_rank",
    "two_in_parallel",
    "two_in_series",
]
