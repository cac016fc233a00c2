# File: src/oracle/trees.py

# -*- coding: utf-8 -*-

"""
Exhaustive enumeration of rooted binary trees on a small taxon set.
"""

from typing import Iterable, List, Optional

from src.phylo.exceptions import CapExceededError, PhyloError
from src.phylo.tree import Nested, PhyloTree, regraft_positions
from src.utils.config_defaults import DEFAULT_LIMITS_CONFIG


def enumerate_all_trees(taxa: Iterable[str], max_leaves: Optional[int] = None) -> List[PhyloTree]:
    """
    All (2n-3)!! rooted binary trees on the taxa, in canonical order.

    Each tree is built by inserting the taxa one at a time on every arc of the
    trees built so far, root arc included.

    Raises:
        PhyloError: If the taxon set is empty.
        CapExceededError: If there are more than max_leaves taxa.
    """
    labels = sorted(set(taxa))
    max_leaves = DEFAULT_LIMITS_CONFIG['oracle_tree_cap'] if max_leaves is None else max_leaves
    if not labels:
        raise PhyloError('Cannot enumerate trees on an empty taxon set')
    if len(labels) > max_leaves:
        raise CapExceededError(
            f"{len(labels)} taxa give an exponential blow-up of trees; the limit is {max_leaves}"
        )

    shapes: List[Nested] = [labels[0]]
    for taxon in labels[1:]:
        shapes = [grown for shape in shapes for grown in regraft_positions(shape, taxon)]
    return sorted((PhyloTree.from_nested(s) for s in shapes), key=lambda t: t.canonical)
