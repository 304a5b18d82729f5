# crslab/torus2/__init__.py
"""
Measure calculus on torsion points of the 2-torus
"""

from .measures import (
    TorsionMeasure2,
    DecompositionReport,
    BetaRow,
    beta,
    alpha,
    alpha_sum,
    count_generating_pairs,
    generating_pairs,
    point_order,
    points_of_order,
    nu_measure,
    tau_measure,
    embed_nu,
    decompose_tau,
    haar_from_tau,
    beta_product_ratio,
    partial_euler_product,
    min_beta_ratio,
    generating_tuple_count,
    generating_tuple_ratio,
    generating_ratio_lower_bound,
    generating_ratio_monotone,
    sl2_orbit,
    beta_table,
)

__all__ = [
    'TorsionMeasure2',
    'DecompositionReport',
    'BetaRow',
    'beta',
    'alpha',
    'alpha_sum',
    'count_generating_pairs',
    'generating_pairs',
    'point_order',
    'points_of_order',
    'nu_measure',
    'tau_measure',
    'embed_nu',
    'decompose_tau',
    'haar_from_tau',
    'beta_product_ratio',
    'partial_euler_product',
    'min_beta_ratio',
    'generating_tuple_count',
    'generating_tuple_ratio',
    'generating_ratio_lower_bound',
    'generating_ratio_monotone',
    'sl2_orbit',
    'beta_table',
]
