# File: src/hypercube/__init__.py

# -*- coding: utf-8 -*-

"""
Gray codes, hypercube recognition, bit edge subsets and Hamilton cycles.
"""

from .gray import GrayCode, gray_code, hamming
from .recognition import HypercubeMap, bit_edge_subset_from_seed, hamilton_cycle, hypercube_iso, split_on_subset

__all__ = [
    'GrayCode',
    'gray_code',
    'hamming',
    'HypercubeMap',
    'bit_edge_subset_from_seed',
    'hamilton_cycle',
    'hypercube_iso',
    'split_on_subset',
]
