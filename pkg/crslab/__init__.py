# crslab/__init__.py
"""
crslab

Exact finite computations around characteristic random subgroups:
linear algebra over F_q, finite abelian groups, truncated subgroup laws
over Z/n, torsion measures on T^2 and free-group tools.
"""

__version__ = '1.0.0'
__author__ = 'crslab contributors'

# Subpackages are imported explicitly: from crslab.crs import CrsParam

__all__ = []
