# File: src/utils/logging_utils.py

# -*- coding: utf-8 -*-

"""
Logging utilities for l1kit.
Provides centralized logging configuration. Console output goes to stderr so
that stdout stays reserved for command results; file output is optional and
rotates.
"""

import os
import sys
from datetime import datetime
from pathlib import Path
from typing import Dict, Any, Optional

from loguru import logger

LOG_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{extra[name]}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
    "<level>{message}</level>"
)

# Records logged through the bare logger still need a name for the format.
logger.configure(extra={'name': 'l1kit'})


def setup_logger(
    config: Dict[str, Any],
    log_level: Optional[str] = None,
    log_file: Optional[str] = None,
    console: Optional[bool] = None
) -> Optional[str]:
    """
    Setup the logger with the specified configuration.

    Args:
        config: Configuration dictionary containing logging settings.
        log_level: Logging level; defaults to the configured level.
        log_file: Optional log file path. When None, a file is only written if
            the configuration enables it, under a dated default name.
        console: Whether to log to stderr; defaults to the configured value.

    Returns:
        The log file path in use, or None when logging to the console only.
    """
    logging_config = config.get('logging', {})
    log_level = (log_level or logging_config.get('default_level', 'WARNING')).upper()
    if console is None:
        console = logging_config.get('console', True)

    # Remove default handlers
    logger.remove()

    if console:
        logger.add(
            sys.stderr,
            format=LOG_FORMAT,
            level=log_level,
            colorize=True
        )

    if not log_file and logging_config.get('to_file', False):
        log_dir = logging_config.get('log_dir', 'logs')
        current_date = datetime.now().strftime('%Y-%m-%d')
        log_file = os.path.join(log_dir, f"l1kit_{current_date}.log")

    if log_file:
        os.makedirs(Path(log_file).parent, exist_ok=True)
        logger.add(
            log_file,
            format=LOG_FORMAT,
            level=log_level,
            rotation=logging_config.get('rotation_size', '10 MB'),
            retention=logging_config.get('retention_days', '30 days'),
            compression=logging_config.get('compression', 'zip'),
            backtrace=True,
            diagnose=True
        )

    logger.debug(f"Logging initialized at {log_level} level")
    if log_file:
        logger.debug(f"Log file: {log_file}")
    return log_file


def get_module_logger(name: str) -> "logger":
    """
    Get a logger for a specific module.

    Args:
        name: Module name for the logger.

    Returns:
        logger: Configured logger for the module.
    """
    return logger.bind(name=name)


def log_pipeline_stats(stats: Dict[str, Any]) -> None:
    """
    Log pipeline statistics.

    Args:
        stats: Dictionary of pipeline statistics.
    """
    logger.bind(name='pipeline', pipeline_stats=True).info(
        f"Pipeline Stats | "
        f"Trees: {stats.get('trees', 0)} | "
        f"Pairs tested: {stats.get('pairs_tested', 0)} | "
        f"Edges: {stats.get('edges', 0)} | "
        f"k: {stats.get('k', 0)} | "
        f"Decision: {stats.get('decision', '-')} | "
        f"Networks: {stats.get('networks', 0)} | "
        f"Cache hits: {stats.get('cache_hits', 0)} | "
        f"Elapsed: {stats.get('elapsed', 0.0):.3f}s"
    )
