# File: src/pipeline.py

# -*- coding: utf-8 -*-

"""
Stage orchestration for l1kit.
Reads inputs, maps the loaded configuration onto library arguments, consults
the result cache and keeps run statistics for the CLI.
"""

import time
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from src.benchmark import measure_reconstruction_scaling
from src.cache import ResultCache, cache_params
from src.display import DisplaySet, display_set
from src.hypercube import HypercubeMap, hypercube_iso
from src.level1 import TIE_BREAK_KEYS, analyse, reconstruct
from src.oracle import GeneratorConfig, enumerate_all_trees, random_network
from src.phylo import (
    PhyloNetwork, PhyloTree,
    parse_enewick, parse_newick, reticulation_source_pairs, serialize_newick, trivial_reticulations, validate
)
from src.phylo.exceptions import NewickParseError, PhyloError
from src.rspr import RsprGraph, build_rspr_graph
from src.utils.logging_utils import get_module_logger, log_pipeline_stats

# Module logger
logger = get_module_logger("pipeline")


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line and not line.startswith('#'):
            lines.append((number, line))
    return lines


class L1Pipeline:
    """Runs l1kit operations with configured limits, caching and statistics."""

    def __init__(self, config: Dict[str, Any]):
        """
        Initialize the pipeline.

        Args:
            config: Configuration dictionary from load_config().
        """
        self.config = config
        self.limits = config['limits']
        self.tie_break = config['labelling']['tie_break']
        self.progress = config['output'].get('progress', False)
        self.cache = ResultCache(config)
        self._reset_stats()
        logger.debug("L1Pipeline initialized")

    def _reset_stats(self) -> None:
        self.stats: Dict[str, Any] = {
            'trees': 0,
            'pairs_tested': 0,
            'edges': 0,
            'k': 0,
            'decision': '-',
            'networks': 0,
            'cache_hits': 0,
            'elapsed': 0.0,
        }

    # Cache

    def clear_cache(self, days_old: Optional[int] = None) -> int:
        """
        Delete cached results.

        Args:
            days_old: Only delete entries at least this many days old.

        Returns:
            int: Number of entries deleted.
        """
        count = self.cache.clear(days_old=days_old)
        stats = self.cache.get_cache_stats()
        logger.debug(f"Cache now holds {stats['count']} entries ({stats['size_bytes']} bytes)")
        return count

    # Input

    def load_trees(self, text: str) -> List[PhyloTree]:
        """
        Parse a tree file: one Newick tree per line, blank lines and '#' comments skipped.

        Raises:
            NewickParseError: With the offending line number in the message.
        """
        trees = []
        for number, line in _content_lines(text):
            try:
                trees.append(parse_newick(line))
            except NewickParseError as e:
                raise type(e)(f"line {number}: {e}") from e
        if not trees:
            raise PhyloError('Input holds no trees')
        self.stats['trees'] = len(trees)
        logger.info(f"Read {len(trees)} trees")
        return trees

    def load_network(self, text: str) -> PhyloNetwork:
        """Parse the single eNewick network of an input text."""
        lines = _content_lines(text)
        if not lines:
            raise PhyloError('Input holds no network')
        return parse_enewick(' '.join(line for _, line in lines))

    # Operations

    def display_set(self, network: PhyloNetwork, cap: Optional[int] = None) -> DisplaySet:
        cap = self.limits['display_cap'] if cap is None else cap
        return display_set(network, cap=cap, progress=self.progress)

    def rspr_graph(self, trees: List[PhyloTree]) -> Tuple[RsprGraph, Optional[HypercubeMap]]:
        """The rSPR graph of the trees and, when it is a hypercube, its map."""
        start = time.time()
        g = build_rspr_graph(trees, progress=self.progress)
        self.stats.update(pairs_tested=g.pairs_tested, edges=len(g.edge_moves), elapsed=time.time() - start)
        return g, hypercube_iso(g.graph)

    def check(self, trees: List[PhyloTree], tie_break: Optional[str] = None) -> Dict[str, Any]:
        """Decision and labelling report without rebuilding a network."""
        result = analyse(
            trees,
            key=TIE_BREAK_KEYS[tie_break or self.tie_break],
            max_tree_exponent=self.limits['max_tree_exponent'],
            progress=self.progress,
        )
        report = result.to_dict()
        del report['network']
        report['hypercube'] = result.hypercube is not None or result.k == 0
        report['candidates'] = result.labelling.to_dict()['candidates'] if result.labelling else []
        self._record(result.to_dict(), result.graph, result.elapsed)
        return report

    def reconstruct(
        self,
        trees: List[PhyloTree],
        all_networks: bool = False,
        tie_break: Optional[str] = None,
    ) -> Dict[str, Any]:
        """
        Reconstruct a level-1 network, answering from the cache when possible.

        Returns:
            dict: The result JSON document.
        """
        tie_break = tie_break or self.tie_break
        params = cache_params(
            'reconstruct', (serialize_newick(t) for t in trees),
            tie_break=tie_break, all_networks=all_networks
        )
        data, hit = self.cache.get(params)
        if hit:
            self.stats['cache_hits'] += 1
            self._record(data, None, 0.0)
            return data

        logger.info(f"Reconstructing from {len(trees)} trees")
        result = reconstruct(
            trees,
            all_networks=all_networks,
            key=TIE_BREAK_KEYS[tie_break],
            max_tree_exponent=self.limits['max_tree_exponent'],
            progress=self.progress,
        )
        data = result.to_dict()
        self.cache.save(params, data)
        self._record(data, result.graph, result.elapsed)
        logger.info(f"Reconstruction finished in {result.elapsed:.3f}s: {data['decision']}")
        return data

    def _record(self, data: Dict[str, Any], graph: Optional[RsprGraph], elapsed: float) -> None:
        self.stats.update(
            k=data.get('k') or 0,
            decision=data['decision'],
            networks=len(data.get('all_networks') or ([data['network']] if data.get('network') else [])),
            elapsed=elapsed,
        )
        if graph is not None:
            self.stats.update(pairs_tested=graph.pairs_tested, edges=len(graph.edge_moves))
        log_pipeline_stats(self.stats)

    def classify(self, network: PhyloNetwork) -> Dict[str, Any]:
        """Class membership, and for level-1 networks their reticulation details."""
        report = validate(network).to_dict()
        report['leaves'] = sorted(network.leaves)
        if report['is_level1']:
            report['trivial_reticulations'] = len(trivial_reticulations(network))
            report['reticulation_clusters'] = [
                [sorted(cluster), sorted(source)] for cluster, source in reticulation_source_pairs(network)
            ]
        return report

    # Oracle

    def oracle_trees(self, leaves: int) -> List[PhyloTree]:
        return enumerate_all_trees((str(i) for i in range(1, leaves + 1)), max_leaves=self.limits['oracle_tree_cap'])

    def oracle_random_network(self, cfg: GeneratorConfig) -> PhyloNetwork:
        return random_network(cfg)

    def oracle_scaling(self, leaves: int, seed: int = 0, repeats: int = 3) -> pd.DataFrame:
        return measure_reconstruction_scaling(leaves=leaves, seed=seed, repeats=repeats, progress=self.progress)
