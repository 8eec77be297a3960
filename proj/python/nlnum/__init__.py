"""Newell-Littlewood numbers and Koike-Terada basis products.

Partitions are lists (or tuples) of weakly decreasing nonnegative integers;
expansions come back as lists of (partition, coefficient) pairs sorted by
partition size and then lexicographically.
"""

from nlnum._core import (
    conjugate,
    count_lattice_points,
    detection_witness,
    extended_weyl_holds,
    h_profile,
    horn_holds,
    is_nl_multiplicity_free,
    join,
    kleber_rank,
    kt_product_via_schur,
    kt_to_schur,
    lr_coefficient,
    meet,
    nl2_member,
    nl_function,
    nl_number,
    nl_pieri,
    nl_product,
    nl_witnesses,
    oscillating_count,
    schur_product,
    skew_schur,
    standard_count,
    subpartitions_of_size,
    sym_diff_size,
    union_sorted,
)

__all__ = [
    "conjugate",
    "count_lattice_points",
    "detection_witness",
    "extended_weyl_holds",
    "h_profile",
    "horn_holds",
    "is_nl_multiplicity_free",
    "join",
    "kleber_rank",
    "kt_product_via_schur",
    "kt_to_schur",
    "lr_coefficient",
    "meet",
    "nl2_member",
    "nl_function",
    "nl_number",
    "nl_pieri",
    "nl_product",
    "nl_witnesses",
    "oscillating_count",
    "schur_product",
    "skew_schur",
    "standard_count",
    "subpartitions_of_size",
    "sym_diff_size",
    "union_sorted",
]
