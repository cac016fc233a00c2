# File: src/utils/config_defaults.py

# -*- coding: utf-8 -*-

"""
Default configurations for l1kit.
"""

# Default logging configuration
DEFAULT_LOGGING_CONFIG = {
    'log_dir': 'logs',
    'rotation_size': '10 MB',
    'retention_days': '30 days',
    'compression': 'zip',
    'default_level': 'WARNING',
    'console': True,
    'to_file': False
}

# Default computation limits
DEFAULT_LIMITS_CONFIG = {
    'display_cap': 20,  # max reticulations for 2^k enumeration
    'max_tree_exponent': 20,  # refuse |P| > 2^20
    'oracle_tree_cap': 8,  # max leaves for tree-space enumeration and BFS
    'oracle_display_cap': 12  # max reticulations for the brute display set
}

# Default labelling configuration
DEFAULT_LABELLING_CONFIG = {
    'tie_break': 'largest'  # largest | smallest moving cluster first
}

# Default cache configuration
DEFAULT_CACHE_CONFIG = {
    'cache_dir': '.l1kit_cache',
    'enabled': False,
    'ttl_days': 30  # Time to live in days
}

# Default output configuration
DEFAULT_OUTPUT_CONFIG = {
    'pretty': False,
    'progress': False
}
