# crslab/freegrp/__init__.py
"""
Free groups: reduced words, word maps, Schreier coset graphs
"""

from .words import (
    FreeWord,
    reduce_word,
    multiply,
    invert,
    commutator,
    power,
    product_of,
    adyan_word,
    format_word,
    parse_word,
)
from .perm_groups import (
    FinGroup,
    parse_permutation,
    parse_permutation_list,
    format_permutation,
    evaluate_word,
    word_map_eval,
    verbal_subgroup,
    relabelings,
    normalizing_relabelings,
    is_fully_invariant,
)
from .schreier import (
    REGULAR,
    POINTS,
    SchreierGraph,
    IndexPSubgroup,
    schreier_graph,
    schreier_basis,
    basis_size,
    rewrite_in_basis,
    in_k_p,
    normalize_functional,
    sample_index_p_subgroup,
    enumerate_index_p_functionals,
    index_p_subgroup_count,
)

__all__ = [
    'FreeWord',
    'reduce_word',
    'multiply',
    'invert',
    'commutator',
    'power',
    'product_of',
    'adyan_word',
    'format_word',
    'parse_word',
    'FinGroup',
    'parse_permutation',
    'parse_permutation_list',
    'format_permutation',
    'evaluate_word',
    'word_map_eval',
    'verbal_subgroup',
    'relabelings',
    'normalizing_relabelings',
    'is_fully_invariant',
    'REGULAR',
    'POINTS',
    'SchreierGraph',
    'IndexPSubgroup',
    'schreier_graph',
    'schreier_basis',
    'basis_size',
    'rewrite_in_basis',
    'in_k_p',
    'normalize_functional',
    'sample_index_p_subgroup',
    'enumerate_index_p_functionals',
    'index_p_subgroup_count',
]
