# File: tests/conftest.py
# -*- coding: utf-8 -*-

"""
Configuration and fixtures for pytest for l1kit.
"""

import os
import sys
import pytest
from pathlib import Path

# Add the project root to the path so we can import modules
sys.path.insert(0, str(Path(__file__).parent.parent))

# Import project modules
from src.phylo import parse_enewick, parse_newick
from src.utils.config_defaults import (
    DEFAULT_CACHE_CONFIG,
    DEFAULT_LABELLING_CONFIG,
    DEFAULT_LIMITS_CONFIG,
    DEFAULT_LOGGING_CONFIG,
    DEFAULT_OUTPUT_CONFIG
)

# Four trees displayed by a level-1 network with two nested reticulations.
F4_NEWICK = {
    'T1': '((((1,2),(3,4)),5),6);',
    'T2': '((((1,2),(3,4)),6),5);',
    'T3': '(((2,(3,(1,4))),5),6);',
    'T4': '(((2,(3,(1,4))),6),5);',
}
N4_ENEWICK = '(((((2,(1)#H2),(3,(#H2,4))))#H1,5),(#H1,6));'


@pytest.fixture
def test_config(tmp_path):
    """Fixture for test configuration."""
    # Create a test configuration that doesn't rely on the user's environment
    config = {
        'limits': DEFAULT_LIMITS_CONFIG.copy(),
        'labelling': DEFAULT_LABELLING_CONFIG.copy(),
        'cache': DEFAULT_CACHE_CONFIG.copy(),
        'logging': DEFAULT_LOGGING_CONFIG.copy(),
        'output': DEFAULT_OUTPUT_CONFIG.copy(),
    }

    # Override with test-specific values
    config['cache'].update({
        'cache_dir': str(tmp_path / 'cache'),
        'enabled': True,
        'ttl_days': 1,  # Short TTL for testing
    })

    config['logging'].update({
        'log_dir': str(tmp_path / 'logs'),
        'default_level': 'DEBUG',
        'console': True,
    })

    return config


@pytest.fixture
def setup_test_environment(test_config):
    """Setup test environment with directories."""
    os.makedirs(test_config['cache']['cache_dir'], exist_ok=True)
    os.makedirs(test_config['logging']['log_dir'], exist_ok=True)
    yield


@pytest.fixture
def f4_trees():
    """The four example trees, by name."""
    return {name: parse_newick(text) for name, text in F4_NEWICK.items()}


@pytest.fixture
def f4_list(f4_trees):
    """The four example trees in the order T1..T4."""
    return [f4_trees[name] for name in ('T1', 'T2', 'T3', 'T4')]


@pytest.fixture
def n4_network():
    """The level-1 network displaying exactly the four example trees."""
    return parse_enewick(N4_ENEWICK)


@pytest.fixture
def f4_file(tmp_path):
    """A tree file holding the four example trees, with a comment and a blank line."""
    path = tmp_path / 'f4.nwk'
    lines = ['# four trees'] + list(F4_NEWICK.values())
    lines.insert(3, '')
    path.write_text('\n'.join(lines) + '\n')
    return str(path)


@pytest.fixture
def n4_file(tmp_path):
    """An eNewick file holding the example network."""
    path = tmp_path / 'n4.enwk'
    path.write_text(N4_ENEWICK + '\n')
    return str(path)
