# crslab/crs/__init__.py
"""
CRS parameters, truncated subgroup laws, duality and limits
"""

from .params import CrsParam, divides, enumerate_params, char_subgroups
from .subgroups import (
    TruncSubgroup,
    ann_sub,
    ker_sub,
    sum_sub,
    intersect_sub,
    ann_of_multiple,
    char_subgroup_truncation,
    image_under,
    enumerate_subgroups,
    check_duality,
)
from .distribution import (
    SubgroupDistribution,
    tv_distance,
    pushforward_ann,
    apply_automorphism,
    automorphism_generators,
    to_json_dict,
    from_json_dict,
    MARGINAL_CSV_COLUMNS,
    marginal_csv_rows,
)
from .samplers import (
    KERNEL,
    ANNIHILATOR,
    normalize_side,
    sample_kernel_side,
    sample_annihilator_side,
    sample_subgroup,
    exact_distribution,
    iter_samples,
    monte_carlo_distribution,
    intersection_dim_distribution,
    intersection_dim_counts,
    within_sigma,
)
from .limits import (
    SequenceDescriptor,
    classify_limit,
    evaluation_zero_probability,
    evaluation_zero_probability_bruteforce,
    tv_to_limit,
    elementary_tv_sequence,
)

__all__ = [
    'CrsParam',
    'divides',
    'enumerate_params',
    'char_subgroups',
    'TruncSubgroup',
    'ann_sub',
    'ker_sub',
    'sum_sub',
    'intersect_sub',
    'ann_of_multiple',
    'char_subgroup_truncation',
    'image_under',
    'enumerate_subgroups',
    'check_duality',
    'SubgroupDistribution',
    'tv_distance',
    'pushforward_ann',
    'apply_automorphism',
    'automorphism_generators',
    'to_json_dict',
    'from_json_dict',
    'MARGINAL_CSV_COLUMNS',
    'marginal_csv_rows',
    'KERNEL',
    'ANNIHILATOR',
    'normalize_side',
    'sample_kernel_side',
    'sample_annihilator_side',
    'sample_subgroup',
    'exact_distribution',
    'iter_samples',
    'monte_carlo_distribution',
    'intersection_dim_distribution',
    'intersection_dim_counts',
    'within_sigma',
    'SequenceDescriptor',
    'classify_limit',
    'evaluation_zero_probability',
    'evaluation_zero_probability_bruteforce',
    'tv_to_limit',
    'elementary_tv_sequence',
]
