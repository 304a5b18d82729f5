# crslab/config/__init__.py
"""
Configuration management package
"""

from .settings import config, ConfigManager, resolve_cap

__all__ = ['config', 'ConfigManager', 'resolve_cap']
