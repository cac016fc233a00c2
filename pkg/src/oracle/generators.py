# File: src/oracle/generators.py

# -*- coding: utf-8 -*-

"""
Seeded random trees and networks for tests and benchmarks.

Networks grow from a random tree by repeatedly subdividing two arcs and
joining the new vertices, rejecting additions that leave the requested
network class. All randomness comes from one numpy Generator seeded by the
configuration, so equal configurations give equal networks.
"""

from dataclasses import dataclass, replace
from typing import Callable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from src.phylo.exceptions import InfeasibleConfigError
from src.phylo.network import PhyloNetwork, subdivide_in_arc, tree_to_digraph, validate
from src.phylo.tree import Nested, PhyloTree, regraft_positions
from src.utils.logging_utils import get_module_logger

# Module logger
logger = get_module_logger("oracle.generators")

TARGETS = ('level1', 'tree-child', 'normal', 'any')


@dataclass(frozen=True)
class GeneratorConfig:
    """
    Parameters of a random network.

    Attributes:
        leaves: Number of taxa, labelled "1".."n".
        reticulations: Number of reticulations to add.
        target: Network class the result must belong to.
        seed: Seed of the random generator.
        no_trivial: Reject networks with a reticulation whose parents are adjacent.
    """

    leaves: int
    reticulations: int = 0
    target: str = 'level1'
    seed: int = 0
    no_trivial: bool = False

    def __post_init__(self):
        if self.leaves < 1:
            raise InfeasibleConfigError(f"A network needs at least one leaf, got {self.leaves}")
        if self.reticulations < 0:
            raise InfeasibleConfigError(f"Reticulation count must be non-negative, got {self.reticulations}")
        if self.target not in TARGETS:
            raise InfeasibleConfigError(f"Unknown network class {self.target!r}; expected one of {TARGETS}")
        if self.reticulations and self.leaves < 2:
            raise InfeasibleConfigError('Reticulations need at least two taxa')
        if self.target != 'any' and self.reticulations > self.leaves - 1:
            raise InfeasibleConfigError(
                f"A {self.target} network on {self.leaves} taxa has at most {self.leaves - 1} reticulations"
            )

    @property
    def taxa(self) -> List[str]:
        return [str(i) for i in range(1, self.leaves + 1)]


def random_tree(taxa: Sequence[str], rng: np.random.Generator) -> PhyloTree:
    """A random rooted binary tree, built by inserting taxa on uniformly chosen arcs."""
    shape: Nested = taxa[0]
    for taxon in taxa[1:]:
        positions = list(regraft_positions(shape, taxon))
        shape = positions[int(rng.integers(len(positions)))]
    return PhyloTree.from_nested(shape)


def _in_class(network: PhyloNetwork, target: str) -> bool:
    if target == 'any':
        return True
    classification = validate(network)
    if target == 'level1':
        return classification.is_level1
    if target == 'tree-child':
        return classification.is_tree_child
    return classification.is_normal


def has_triangle(network: PhyloNetwork) -> bool:
    """Whether some reticulation has one parent directly below the other."""
    for r in network.reticulations:
        p1, p2 = network.parents(r)
        if network.graph.has_edge(p1, p2) or network.graph.has_edge(p2, p1):
            return True
    return False


def _add_reticulation(graph: nx.DiGraph, root: int, rng: np.random.Generator) -> Optional[nx.DiGraph]:
    # The root's pendant arc may carry the tail, giving a new root.
    arcs: List[Tuple[Optional[int], int]] = [(None, root)] + sorted(graph.edges)
    tail_arc = arcs[int(rng.integers(len(arcs)))]
    head_arc = arcs[1 + int(rng.integers(len(arcs) - 1))]
    if tail_arc == head_arc:
        return None
    grown = nx.DiGraph(graph)
    tail = subdivide_in_arc(grown, root) if tail_arc[0] is None else _split(grown, tail_arc)
    head = _split(grown, head_arc)
    grown.add_edge(tail, head)
    if not nx.is_directed_acyclic_graph(grown):
        return None
    return grown


def _split(graph: nx.DiGraph, arc: Tuple[int, int]) -> int:
    u, v = arc
    w = max(graph.nodes) + 1
    graph.remove_edge(u, v)
    graph.add_edge(u, w)
    graph.add_edge(w, v)
    return w


def _root_of(graph: nx.DiGraph) -> int:
    return next(v for v in graph.nodes if graph.in_degree(v) == 0)


def random_network(
    cfg: GeneratorConfig,
    max_restarts: int = 200,
    max_tries_per_step: int = 100,
) -> PhyloNetwork:
    """
    A random network of the configured class.

    Raises:
        InfeasibleConfigError: If no such network was found within the attempt limits.
    """
    rng = np.random.default_rng(cfg.seed)
    for _ in range(max_restarts):
        graph = tree_to_digraph(random_tree(cfg.taxa, rng))
        for _ in range(cfg.reticulations):
            for _ in range(max_tries_per_step):
                grown = _add_reticulation(graph, _root_of(graph), rng)
                if grown is not None and _in_class(PhyloNetwork(grown), cfg.target):
                    graph = grown
                    break
            else:
                break
        network = PhyloNetwork(graph)
        if network.reticulation_count != cfg.reticulations:
            continue
        if cfg.no_trivial and has_triangle(network):
            continue
        return network
    raise InfeasibleConfigError(
        f"No {cfg.target} network with {cfg.reticulations} reticulations on {cfg.leaves} taxa "
        f"found in {max_restarts} attempts"
    )


def random_level1(cfg: GeneratorConfig) -> PhyloNetwork:
    """A random level-1 network; see random_network."""
    return random_network(replace(cfg, target='level1'))


def find_network(
    predicate: Callable[[PhyloNetwork], bool],
    cfg: GeneratorConfig,
    max_seeds: int = 500,
) -> PhyloNetwork:
    """
    The first random network, over seeds cfg.seed, cfg.seed + 1, ..., satisfying predicate.

    Raises:
        InfeasibleConfigError: If none of max_seeds seeds works.
    """
    for offset in range(max_seeds):
        try:
            network = random_network(replace(cfg, seed=cfg.seed + offset))
        except InfeasibleConfigError:
            continue
        if predicate(network):
            logger.debug(f"Found network at seed {cfg.seed + offset}")
            return network
    raise InfeasibleConfigError(f"No network satisfying the predicate in {max_seeds} seeds")
