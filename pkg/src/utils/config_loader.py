# File: src/utils/config_loader.py

# -*- coding: utf-8 -*-

"""
Configuration loader for l1kit.
Loads configuration from environment variables (and an optional .env file)
and applies defaults.
"""

import os
from typing import Dict, Any
from dotenv import load_dotenv

from .config_defaults import (
    DEFAULT_LOGGING_CONFIG,
    DEFAULT_LIMITS_CONFIG,
    DEFAULT_LABELLING_CONFIG,
    DEFAULT_CACHE_CONFIG,
    DEFAULT_OUTPUT_CONFIG
)

LOG_LEVELS = ('TRACE', 'DEBUG', 'INFO', 'SUCCESS', 'WARNING', 'ERROR', 'CRITICAL')
TIE_BREAKS = ('largest', 'smallest')


def _env_flag(name: str, default: bool) -> bool:
    """Read a true/false environment variable."""
    return os.getenv(name, str(default)).strip().lower() in ('1', 'true', 'yes', 'on')


def _env_int(name: str, default: int) -> int:
    """Read an integer environment variable."""
    value = os.getenv(name)
    if value is None or value.strip() == '':
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be an integer, got {value!r}")


def load_config() -> Dict[str, Any]:
    """
    Load configuration from environment variables and apply defaults.

    Returns:
        dict: Configuration dictionary.
    """
    # Load environment variables from .env file
    load_dotenv()

    # Computation limits
    limits_config = DEFAULT_LIMITS_CONFIG.copy()
    limits_config.update({
        'display_cap': _env_int('L1KIT_CAP', limits_config['display_cap']),
        'max_tree_exponent': _env_int('L1KIT_MAX_TREES_EXP', limits_config['max_tree_exponent']),
        'oracle_tree_cap': _env_int('L1KIT_ORACLE_TREE_CAP', limits_config['oracle_tree_cap']),
        'oracle_display_cap': _env_int('L1KIT_ORACLE_DISPLAY_CAP', limits_config['oracle_display_cap']),
    })

    # Labelling configuration
    labelling_config = DEFAULT_LABELLING_CONFIG.copy()
    labelling_config.update({
        'tie_break': os.getenv('L1KIT_TIE_BREAK', labelling_config['tie_break']).strip().lower(),
    })

    # Cache configuration
    cache_config = DEFAULT_CACHE_CONFIG.copy()
    cache_config.update({
        'cache_dir': os.getenv('L1KIT_CACHE_DIR', cache_config['cache_dir']),
        'enabled': _env_flag('L1KIT_CACHE_ENABLED', cache_config['enabled']),
        'ttl_days': _env_int('L1KIT_CACHE_TTL_DAYS', cache_config['ttl_days']),
    })

    # Logging configuration
    logging_config = DEFAULT_LOGGING_CONFIG.copy()
    logging_config.update({
        'log_dir': os.getenv('L1KIT_LOG_DIR', logging_config['log_dir']),
        'default_level': os.getenv('L1KIT_LOG_LEVEL', logging_config['default_level']).strip().upper(),
        'to_file': _env_flag('L1KIT_LOG_TO_FILE', logging_config['to_file']),
    })

    # Output configuration
    output_config = DEFAULT_OUTPUT_CONFIG.copy()
    output_config.update({
        'progress': _env_flag('L1KIT_PROGRESS', output_config['progress']),
    })

    config = {
        'limits': limits_config,
        'labelling': labelling_config,
        'cache': cache_config,
        'logging': logging_config,
        'output': output_config,
    }

    # Validate configuration
    _validate_config(config)

    return config


def _validate_config(config: Dict[str, Any]) -> None:
    """
    Validate the configuration.

    Args:
        config (dict): Configuration dictionary.

    Raises:
        ValueError: If any configuration value is out of range.
    """
    limits = config['limits']
    if not 0 <= limits['display_cap'] <= 30:
        raise ValueError(f"Display cap must be between 0 and 30, got {limits['display_cap']}")

    if not 0 <= limits['max_tree_exponent'] <= 20:
        raise ValueError(f"Max tree exponent must be between 0 and 20, got {limits['max_tree_exponent']}")

    if limits['oracle_tree_cap'] < 1 or limits['oracle_display_cap'] < 0:
        raise ValueError('Oracle caps must be positive')

    if config['labelling']['tie_break'] not in TIE_BREAKS:
        raise ValueError(f"Tie-break must be one of {', '.join(TIE_BREAKS)}, got {config['labelling']['tie_break']!r}")

    if config['logging']['default_level'] not in LOG_LEVELS:
        raise ValueError(f"Unknown log level {config['logging']['default_level']!r}")

    if config['cache']['ttl_days'] < 0:
        raise ValueError('Cache TTL must not be negative')
