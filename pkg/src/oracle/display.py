# File: src/oracle/display.py

# -*- coding: utf-8 -*-

"""
Display sets by brute force over in-arc choices.

For every way of keeping one in-arc per reticulation, the kept arcs form a
spanning tree of the network; pruning unlabelled sinks and suppressing
in-1/out-1 vertices leaves a displayed tree.
"""

from itertools import product
from typing import Dict, List, Optional, Set

import networkx as nx

from src.phylo.exceptions import CapExceededError
from src.phylo.network import PhyloNetwork
from src.phylo.tree import Nested, PhyloTree
from src.utils.config_defaults import DEFAULT_LIMITS_CONFIG


def _clean(graph: nx.DiGraph, root: int) -> int:
    """Prune unlabelled sinks and splice out unary vertices; returns the new root."""
    changed = True
    while changed:
        changed = False
        for v in list(graph.nodes):
            if graph.out_degree(v) == 0 and 'label' not in graph.nodes[v]:
                graph.remove_node(v)
                changed = True
        for v in list(graph.nodes):
            if graph.out_degree(v) != 1:
                continue
            (child,) = graph.successors(v)
            parents = list(graph.predecessors(v))
            graph.remove_node(v)
            for p in parents:
                graph.add_edge(p, child)
            if v == root:
                root = child
            changed = True
    return root


def _nested(graph: nx.DiGraph, v: int) -> Nested:
    kids = sorted(graph.successors(v))
    if not kids:
        return graph.nodes[v]['label']
    left, right = kids
    return _nested(graph, left), _nested(graph, right)


def brute_display_set(network: PhyloNetwork, cap: Optional[int] = None) -> Set[PhyloTree]:
    """
    The set of trees displayed by network.

    Raises:
        CapExceededError: If the network has more reticulations than the cap.
    """
    cap = DEFAULT_LIMITS_CONFIG['oracle_display_cap'] if cap is None else cap
    reticulations = sorted(network.reticulations)
    if len(reticulations) > cap:
        raise CapExceededError(
            f"{len(reticulations)} reticulations give an exponential blow-up of arc choices; "
            f"the limit is {cap}"
        )

    parents: Dict[int, List[int]] = {r: sorted(network.parents(r)) for r in reticulations}
    found: Set[PhyloTree] = set()
    for kept in product(*(parents[r] for r in reticulations)):
        graph = nx.DiGraph(network.graph)
        for r, keep in zip(reticulations, kept):
            for p in parents[r]:
                if p != keep:
                    graph.remove_edge(p, r)
        root = _clean(graph, network.root)
        found.add(PhyloTree.from_nested(_nested(graph, root)))
    return found
