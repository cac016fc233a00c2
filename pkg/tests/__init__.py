# File: tests/__init__.py
# -*- coding: utf-8 -*-

"""
Test package for l1kit.
"""