# File: tests/unit/test_config.py
# -*- coding: utf-8 -*-

"""
Unit tests for configuration loading and logger setup.
"""

import os
import pytest
from loguru import logger

from src.utils.config_loader import load_config
from src.utils.logging_utils import get_module_logger, log_pipeline_stats, setup_logger

ENV_VARS = (
    'L1KIT_CAP', 'L1KIT_MAX_TREES_EXP', 'L1KIT_ORACLE_TREE_CAP', 'L1KIT_ORACLE_DISPLAY_CAP',
    'L1KIT_TIE_BREAK', 'L1KIT_CACHE_DIR', 'L1KIT_CACHE_ENABLED', 'L1KIT_CACHE_TTL_DAYS',
    'L1KIT_LOG_DIR', 'L1KIT_LOG_LEVEL', 'L1KIT_LOG_TO_FILE', 'L1KIT_PROGRESS',
)


@pytest.fixture
def clean_env(monkeypatch):
    """No L1KIT_* variables, and a .env file is not read."""
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr("src.utils.config_loader.load_dotenv", lambda: False)
    return monkeypatch


class TestLoadConfig:
    """Tests for load_config."""

    def test_defaults(self, clean_env):
        """Without environment variables the defaults apply."""
        config = load_config()
        assert config['limits']['display_cap'] == 20
        assert config['limits']['max_tree_exponent'] == 20
        assert config['labelling']['tie_break'] == 'largest'
        assert config['cache']['enabled'] is False
        assert config['logging']['default_level'] == 'WARNING'
        assert config['output']['progress'] is False

    def test_environment_overrides(self, clean_env):
        """Environment variables override defaults."""
        clean_env.setenv('L1KIT_CAP', '12')
        clean_env.setenv('L1KIT_TIE_BREAK', 'Smallest')
        clean_env.setenv('L1KIT_CACHE_ENABLED', 'yes')
        clean_env.setenv('L1KIT_LOG_LEVEL', 'debug')
        clean_env.setenv('L1KIT_PROGRESS', '1')
        config = load_config()
        assert config['limits']['display_cap'] == 12
        assert config['labelling']['tie_break'] == 'smallest'
        assert config['cache']['enabled'] is True
        assert config['logging']['default_level'] == 'DEBUG'
        assert config['output']['progress'] is True

    @pytest.mark.parametrize('name,value', [
        ('L1KIT_CAP', 'many'),
        ('L1KIT_CAP', '31'),
        ('L1KIT_MAX_TREES_EXP', '21'),
        ('L1KIT_ORACLE_TREE_CAP', '0'),
        ('L1KIT_TIE_BREAK', 'random'),
        ('L1KIT_LOG_LEVEL', 'VERBOSE'),
        ('L1KIT_CACHE_TTL_DAYS', '-1'),
    ])
    def test_invalid_values(self, clean_env, name, value):
        """Out-of-range or malformed values are rejected."""
        clean_env.setenv(name, value)
        with pytest.raises(ValueError):
            load_config()


class TestLogging:
    """Tests for logger setup."""

    def test_console_only(self, test_config):
        """Without a file option nothing is written to disk."""
        assert setup_logger(test_config, console=False) is None

    def test_explicit_file(self, test_config, tmp_path):
        """Records reach the requested file."""
        log_file = str(tmp_path / 'logs' / 'run.log')
        assert setup_logger(test_config, log_level='INFO', log_file=log_file, console=False) == log_file
        get_module_logger('test').info('hello from the tests')
        log_pipeline_stats({'trees': 4, 'k': 2, 'decision': 'yes', 'elapsed': 0.01})
        logger.remove()
        text = open(log_file).read()
        assert 'hello from the tests' in text
        assert 'Trees: 4' in text

    def test_configured_file(self, test_config):
        """to_file writes a dated file under the log directory."""
        test_config['logging']['to_file'] = True
        log_file = setup_logger(test_config, console=False)
        assert log_file.startswith(test_config['logging']['log_dir'])
        assert os.path.basename(log_file).startswith('l1kit_')
