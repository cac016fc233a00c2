# File: src/cache/__init__.py

# -*- coding: utf-8 -*-

"""
On-disk result cache.
"""

from .cache_manager import ResultCache, cache_params

__all__ = ['ResultCache', 'cache_params']
