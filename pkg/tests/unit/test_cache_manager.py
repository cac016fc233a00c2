# File: tests/unit/test_cache_manager.py
# -*- coding: utf-8 -*-

"""
Unit tests for the result cache.
"""

import os
import pytest
from datetime import datetime, timedelta

from src.cache.cache_manager import ResultCache, cache_params

F4_RESULT = {'decision': 'yes', 'reason': None, 'k': 2}


@pytest.fixture
def trees():
    return ['((((1,2),(3,4)),5),6);', '((((1,2),(3,4)),6),5);']


class TestCacheManager:
    """Tests for ResultCache class."""

    def test_initialization(self, test_config, setup_test_environment):
        """Test initialization of the result cache."""
        cache = ResultCache(test_config)
        assert cache.enabled == test_config['cache']['enabled']
        assert cache.cache_dir == test_config['cache']['cache_dir']
        assert cache.ttl_days == test_config['cache']['ttl_days']
        assert os.path.exists(cache.cache_dir)

    def test_cache_key_generation(self, test_config, setup_test_environment, trees):
        """Keys ignore tree order but not options."""
        cache = ResultCache(test_config)

        key1 = cache._generate_cache_key(cache_params('reconstruct', trees, tie_break='largest'))
        assert isinstance(key1, str)
        assert len(key1) == 32

        # Tree order does not matter
        key2 = cache._generate_cache_key(cache_params('reconstruct', reversed(trees), tie_break='largest'))
        assert key1 == key2

        # Options and operation do
        key3 = cache._generate_cache_key(cache_params('reconstruct', trees, tie_break='smallest'))
        key4 = cache._generate_cache_key(cache_params('enumerate', trees, tie_break='largest'))
        assert len({key1, key3, key4}) == 3

    def test_cache_save_and_get(self, test_config, setup_test_environment, trees):
        """Test saving and retrieving from cache."""
        cache = ResultCache(test_config)
        params = cache_params('reconstruct', trees, tie_break='largest')

        assert cache.save(params, F4_RESULT) is True
        cache_path = cache._get_cache_path(cache._generate_cache_key(params))
        assert os.path.exists(cache_path)

        data, is_cache_hit = cache.get(params)
        assert is_cache_hit is True
        assert data == F4_RESULT

        # Test with a request never stored
        data, is_cache_hit = cache.get(cache_params('reconstruct', trees[:1]))
        assert is_cache_hit is False
        assert data is None

    def test_corrupt_entry(self, test_config, setup_test_environment, trees):
        """An unreadable entry is a miss."""
        cache = ResultCache(test_config)
        params = cache_params('reconstruct', trees)
        with open(cache._get_cache_path(cache._generate_cache_key(params)), 'w') as f:
            f.write('{not json')

        data, is_cache_hit = cache.get(params)
        assert is_cache_hit is False
        assert data is None

    def test_cache_ttl(self, test_config, setup_test_environment, trees):
        """Test cache TTL (Time To Live)."""
        cache = ResultCache(test_config)
        params = cache_params('reconstruct', trees)
        cache.save(params, F4_RESULT)

        cache_path = cache._get_cache_path(cache._generate_cache_key(params))
        old_time = datetime.now() - timedelta(days=cache.ttl_days + 2)
        os.utime(cache_path, (old_time.timestamp(), old_time.timestamp()))

        data, is_cache_hit = cache.get(params)
        assert is_cache_hit is False
        assert data is None

    def test_cache_clear(self, test_config, setup_test_environment, trees):
        """Test clearing the cache."""
        cache = ResultCache(test_config)
        for i in range(3):
            cache.save(cache_params('reconstruct', trees, run=i), F4_RESULT)

        assert cache.clear() == 3
        assert len([f for f in os.listdir(cache.cache_dir) if f.endswith('.json')]) == 0

    def test_cache_clear_with_age(self, test_config, setup_test_environment, trees):
        """Test clearing cache with age filter."""
        cache = ResultCache(test_config)
        for i in range(5):
            params = cache_params('reconstruct', trees, run=i)
            cache.save(params, F4_RESULT)

            # Make 3 files older
            if i < 3:
                cache_path = cache._get_cache_path(cache._generate_cache_key(params))
                old_time = datetime.now() - timedelta(days=5)
                os.utime(cache_path, (old_time.timestamp(), old_time.timestamp()))

        assert cache.clear(days_old=3) == 3
        assert len([f for f in os.listdir(cache.cache_dir) if f.endswith('.json')]) == 2

    def test_cache_stats(self, test_config, setup_test_environment, trees):
        """Entry count, size and ages."""
        cache = ResultCache(test_config)
        assert cache.get_cache_stats()['count'] == 0

        cache.save(cache_params('reconstruct', trees), F4_RESULT)
        stats = cache.get_cache_stats()
        assert stats['enabled'] is True
        assert stats['count'] == 1
        assert stats['size_bytes'] > 0
        assert stats['oldest_file_days'] == 0

    def test_cache_disabled(self, test_config, setup_test_environment, trees):
        """Test behavior when cache is disabled."""
        disabled_config = test_config.copy()
        disabled_config['cache'] = test_config['cache'].copy()
        disabled_config['cache']['enabled'] = False

        cache = ResultCache(disabled_config)
        params = cache_params('reconstruct', trees)

        assert cache.save(params, F4_RESULT) is False
        data, is_cache_hit = cache.get(params)
        assert is_cache_hit is False
        assert data is None
        assert cache.clear() == 0
