# File: src/display/__init__.py

# -*- coding: utf-8 -*-

"""
Display sets: binary assignments, bit-string encodings and enumeration.
"""

from .display_set import BinaryAssignment, BitString, DisplaySet, display_set, encode_tree, is_displayed

__all__ = ['BinaryAssignment', 'BitString', 'DisplaySet', 'display_set', 'encode_tree', 'is_displayed']
