# crslab/cli/__init__.py
"""
Command-line package

Each module defines one command or command group; ``COMMANDS`` is what
the root group registers.
"""

from .crs import crs
from .free import free
from .rankdist import rankdist
from .schema import schema
from .torus import torus

COMMANDS = [rankdist, crs, torus, free, schema]

__all__ = ['COMMANDS']
