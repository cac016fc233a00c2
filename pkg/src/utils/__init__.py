# File: src/utils/__init__.py

# -*- coding: utf-8 -*-

"""
Utility modules for l1kit: configuration loading and logging.
"""

from .config_loader import load_config
from .logging_utils import (
    setup_logger, get_module_logger, log_pipeline_stats
)

__all__ = [
    'load_config',
    'setup_logger',
    'get_module_logger',
    'log_pipeline_stats',
]
