# File: src/rspr/__init__.py

# -*- coding: utf-8 -*-

"""
rSPR distance one: agreement forests, moving subtrees and rSPR graphs.
"""

from .agreement import AgreementForest2, OrderedPair, distance_one_moves, is_rnni_one, moving_subtrees, rspr_one
from .distance import brute_rspr_distance, rspr_neighbours
from .graph import Edge, RsprGraph, build_rspr_graph, check_collection, edge, is_connected

__all__ = [
    'AgreementForest2',
    'OrderedPair',
    'distance_one_moves',
    'is_rnni_one',
    'moving_subtrees',
    'rspr_one',
    'brute_rspr_distance',
    'rspr_neighbours',
    'Edge',
    'RsprGraph',
    'build_rspr_graph',
    'check_collection',
    'edge',
    'is_connected',
]
