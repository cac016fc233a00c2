# File: src/oracle/__init__.py

# -*- coding: utf-8 -*-

"""
Brute-force ground truth: tree enumeration, display sets by arc choice and
seeded random networks.
"""

from .display import brute_display_set
from .generators import GeneratorConfig, TARGETS, find_network, has_triangle, random_level1, random_network, random_tree
from .trees import enumerate_all_trees

__all__ = [
    'brute_display_set',
    'GeneratorConfig',
    'TARGETS',
    'find_network',
    'has_triangle',
    'random_level1',
    'random_network',
    'random_tree',
    'enumerate_all_trees',
]
