# File: src/cache/cache_manager.py

# -*- coding: utf-8 -*-

"""
On-disk cache for reconstruction results.

Entries are JSON files named by the md5 of the request: the operation, the
sorted canonical Newick strings of the input trees and the options that change
the answer.
"""

import hashlib
import json
import os
from datetime import datetime
from typing import Any, Dict, Iterable, List, Optional, Tuple

from src.utils.logging_utils import get_module_logger

# Module logger
logger = get_module_logger("cache")


def cache_params(operation: str, newicks: Iterable[str], **options: Any) -> Dict[str, Any]:
    """Request description used as the cache key; tree order does not matter."""
    return {'operation': operation, 'trees': sorted(newicks), 'options': options}


class ResultCache:
    """JSON file cache keyed by request parameters."""

    def __init__(self, config: Dict[str, Any]):
        """
        Args:
            config: Configuration dictionary with a 'cache' section.
        """
        self.cache_dir = config['cache'].get('cache_dir', '.l1kit_cache')
        self.enabled = config['cache'].get('enabled', False)
        self.ttl_days = config['cache'].get('ttl_days', 30)

        if self.enabled:
            os.makedirs(self.cache_dir, exist_ok=True)
            logger.debug(f"Result cache at {os.path.abspath(self.cache_dir)}")

    def _generate_cache_key(self, params: Dict[str, Any]) -> str:
        params_str = json.dumps(params, sort_keys=True)
        return hashlib.md5(params_str.encode()).hexdigest()

    def _get_cache_path(self, cache_key: str) -> str:
        return os.path.join(self.cache_dir, f"{cache_key}.json")

    def _age_days(self, path: str) -> int:
        return (datetime.now() - datetime.fromtimestamp(os.path.getmtime(path))).days

    def get(self, params: Dict[str, Any]) -> Tuple[Optional[Dict[str, Any]], bool]:
        """
        Look up a cached result.

        Args:
            params: Request parameters, usually from cache_params().

        Returns:
            Tuple containing:
                - The cached result (or None)
                - Whether it was a hit
        """
        if not self.enabled:
            return None, False

        cache_key = self._generate_cache_key(params)
        cache_path = self._get_cache_path(cache_key)
        if not os.path.exists(cache_path):
            logger.debug(f"Cache miss for {params['operation']}: {cache_key}")
            return None, False

        try:
            age = self._age_days(cache_path)
            if age > self.ttl_days:
                logger.debug(f"Cache entry {cache_key} expired (age {age} days, TTL {self.ttl_days})")
                return None, False
            with open(cache_path, 'r') as f:
                data = json.load(f)
        except (json.JSONDecodeError, OSError) as e:
            logger.error(f"Error reading cache file {cache_path}: {str(e)}")
            return None, False

        logger.debug(f"Cache hit for {params['operation']}: {cache_key}")
        return data, True

    def save(self, params: Dict[str, Any], data: Dict[str, Any]) -> bool:
        """
        Store a result.

        Returns:
            bool: True if the entry was written.
        """
        if not self.enabled:
            return False

        cache_path = self._get_cache_path(self._generate_cache_key(params))
        try:
            with open(cache_path, 'w') as f:
                json.dump(data, f)
        except OSError as e:
            logger.error(f"Error saving cache file {cache_path}: {str(e)}")
            return False
        return True

    def _entries(self) -> List[str]:
        if not self.enabled or not os.path.exists(self.cache_dir):
            return []
        return [os.path.join(self.cache_dir, f) for f in os.listdir(self.cache_dir) if f.endswith('.json')]

    def clear(self, days_old: Optional[int] = None) -> int:
        """
        Delete cache entries.

        Args:
            days_old: Only delete entries at least this many days old.

        Returns:
            int: Number of entries deleted.
        """
        count = 0
        for path in self._entries():
            if days_old is not None and self._age_days(path) < days_old:
                continue
            try:
                os.remove(path)
                count += 1
            except OSError as e:
                logger.error(f"Error removing cache file {path}: {str(e)}")
        logger.info(f"Cleared {count} cache entries")
        return count

    def get_cache_stats(self) -> Dict[str, Any]:
        """Entry count, total size and age range of the cache."""
        sizes, ages = [], []
        for path in self._entries():
            try:
                sizes.append(os.path.getsize(path))
                ages.append(self._age_days(path))
            except OSError:
                continue
        return {
            'enabled': self.enabled,
            'count': len(sizes),
            'size_bytes': sum(sizes),
            'oldest_file_days': max(ages, default=0),
            'newest_file_days': min(ages, default=0),
        }
