# crslab/qlinalg/__init__.py
"""
Finite-field linear algebra, q-counting formulas and exhaustive oracles
"""

from .field import FieldSpec, get_field, find_irreducible
from .matrix import (
    FqMatrix,
    Subspace,
    rref,
    matrix_rank,
    matmul,
    identity,
    is_invertible,
    kernel_subspace,
)
from .counting import (
    s_seq,
    t_seq,
    gl_order,
    gaussian_binomial,
    rank_count,
    rank_count_orbit,
    vtilde,
    v_small,
    v_small_closed_form,
    vtilde_vector,
    image_dim_distribution,
)
from .enumeration import (
    enumerate_matrices,
    enumerate_subspaces,
    sample_uniform_matrix,
    brute_rank_counts,
    kernel_subspace_distribution,
)

__all__ = [
    'FieldSpec',
    'get_field',
    'find_irreducible',
    'FqMatrix',
    'Subspace',
    'rref',
    'matrix_rank',
    'matmul',
    'identity',
    'is_invertible',
    'kernel_subspace',
    's_seq',
    't_seq',
    'gl_order',
    'gaussian_binomial',
    'rank_count',
    'rank_count_orbit',
    'vtilde',
    'v_small',
    'v_small_closed_form',
    'vtilde_vector',
    'image_dim_distribution',
    'enumerate_matrices',
    'enumerate_subspaces',
    'sample_uniform_matrix',
    'brute_rank_counts',
    'kernel_subspace_distribution',
]
