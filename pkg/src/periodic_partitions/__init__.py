"""Periodic-exponent partition families, the hook-stripping bijection and a
verification harness for the associated counting identities."""

from periodic_partitions.core import (
    Partition,
    QuotRem,
    conjugate,
    enumerate_all,
    format_partition,
    make_partition,
    multiplicity,
    parse_partition,
    partition_count,
    quot_rem,
    stat_K,
    stat_S,
)
from periodic_partitions.families import (
    FamilySelector,
    Kind,
    PeriodPattern,
    Side,
    Variant,
    count_cp_legacy_dp,
    enumerate_family,
    exponent_blocks,
    generate_rp_pattern,
    is_bcp,
    is_brp,
    is_cp_legacy,
    is_cp_pattern,
    is_r_class_regular,
    is_r_regular,
    is_rp_legacy,
    is_rp_pattern,
    parse_selector,
)
from periodic_partitions.bijection import (
    Tableau,
    brute_force_inverse,
    build_tableau,
    fold_into_tableau,
    forward_map,
    group_sequence,
    inverse_map,
    split_groups,
    strip_hook,
)

__version__ = "0.1.0"
