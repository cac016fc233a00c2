# File: src/level1/__init__.py

# -*- coding: utf-8 -*-

"""
Level-1 network reconstruction: nested subtree labellings, decision and rebuild.
"""

from .nested import (
    NestedRelation, TIE_BREAK_KEYS, VerifiedLabelling,
    choose_labelling, labelling_sequences, nested_relation, verifying_pairs
)
from .construct import (
    FailureReason, ReconstructionResult,
    analyse, build_network, construct_level1, enumerate_level1, reconstruct, verify_reconstruction
)

__all__ = [
    'NestedRelation',
    'TIE_BREAK_KEYS',
    'VerifiedLabelling',
    'choose_labelling',
    'labelling_sequences',
    'nested_relation',
    'verifying_pairs',
    'FailureReason',
    'ReconstructionResult',
    'analyse',
    'build_network',
    'construct_level1',
    'enumerate_level1',
    'reconstruct',
    'verify_reconstruction',
]
