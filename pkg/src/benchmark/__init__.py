# File: src/benchmark/__init__.py

# -*- coding: utf-8 -*-

"""
Runtime scaling measurements.
"""

from .scaling import DEFAULT_SIZES, fit_exponent, growth_factors, measure_reconstruction_scaling

__all__ = ['DEFAULT_SIZES', 'fit_exponent', 'growth_factors', 'measure_reconstruction_scaling']
