# File: src/rspr/distance.py

# -*- coding: utf-8 -*-

"""
Exact rSPR distance by breadth-first search over tree space.

Exponential; a test oracle for small leaf sets only.
"""

from collections import deque
from typing import Dict, Optional, Set

from src.phylo.exceptions import CapExceededError, LeafSetMismatchError
from src.phylo.tree import PhyloTree, prune_positions, regraft_positions
from src.utils.config_defaults import DEFAULT_LIMITS_CONFIG


def rspr_neighbours(t: PhyloTree) -> Set[PhyloTree]:
    """All trees exactly one rSPR move away from t."""
    found: Set[PhyloTree] = set()
    for remaining, pruned in prune_positions(t.to_nested()):
        for candidate in regraft_positions(remaining, pruned):
            found.add(PhyloTree.from_nested(candidate))
    found.discard(t)
    return found


def brute_rspr_distance(t1: PhyloTree, t2: PhyloTree, max_leaves: Optional[int] = None) -> int:
    """
    The rSPR distance between two trees, found by BFS from t1.

    Raises:
        LeafSetMismatchError: If the leaf sets differ.
        CapExceededError: If the trees have more than max_leaves taxa.
    """
    if t1.leaves != t2.leaves:
        raise LeafSetMismatchError('Trees have different leaf sets')
    max_leaves = DEFAULT_LIMITS_CONFIG['oracle_tree_cap'] if max_leaves is None else max_leaves
    if len(t1.leaves) > max_leaves:
        raise CapExceededError(f"BFS distance is limited to {max_leaves} taxa")

    distance: Dict[PhyloTree, int] = {t1: 0}
    queue = deque([t1])
    while queue:
        current = queue.popleft()
        if current == t2:
            return distance[current]
        for neighbour in rspr_neighbours(current):
            if neighbour not in distance:
                distance[neighbour] = distance[current] + 1
                queue.append(neighbour)
    # Tree space is connected under rSPR moves.
    raise AssertionError('BFS exhausted tree space without reaching the target')
