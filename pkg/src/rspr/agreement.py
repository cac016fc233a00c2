# File: src/rspr/agreement.py

# -*- coding: utf-8 -*-

"""
rSPR distance one via agreement forests with two blocks.

Cutting a single arc of the first tree (the pendant root arc included) gives
2|X| - 1 candidate bipartitions {(X + rho) - X', X'}. Two non-isomorphic trees
are one rSPR move apart exactly when one of these candidates is an agreement
forest for both trees. Each valid X' is a moving subtree; pairing it with the
smallest common cluster that properly contains it gives an OrderedPair.
"""

from dataclasses import dataclass
from typing import FrozenSet, List, Set, Tuple

from src.phylo.exceptions import (
    IdenticalTreesError,
    InvariantViolation,
    LeafSetMismatchError,
    NotDistanceOneError,
)
from src.phylo.tree import Cluster, PhyloTree, cluster_key, format_cluster, restrict


@dataclass(frozen=True)
class AgreementForest2:
    """
    Agreement forest with two blocks.

    block_rho holds the taxa in the same block as the root marker rho (which is
    implicit); block_other is the moving block.
    """

    block_rho: Cluster
    block_other: Cluster

    def __post_init__(self):
        if not self.block_other or self.block_rho & self.block_other:
            raise ValueError('Forest blocks must be disjoint and the moving block non-empty')

    def __str__(self) -> str:
        rho_side = sorted(self.block_rho) + ['rho']
        return '{' + ','.join(rho_side) + '} ' + format_cluster(self.block_other)


@dataclass(frozen=True)
class OrderedPair:
    """A moving subtree X' with its minimal enclosing common cluster Y'."""

    moving: Cluster
    enclosing: Cluster

    def __post_init__(self):
        if not self.moving < self.enclosing:
            raise ValueError(
                f"Moving cluster {format_cluster(self.moving)} must be a proper subset of "
                f"{format_cluster(self.enclosing)}"
            )

    @property
    def sort_key(self) -> Tuple:
        return cluster_key(self.moving) + cluster_key(self.enclosing)

    def to_list(self) -> List[List[str]]:
        return [sorted(self.moving), sorted(self.enclosing)]

    def __str__(self) -> str:
        return f"{format_cluster(self.moving)} | {format_cluster(self.enclosing)}"


def _check_pair(t1: PhyloTree, t2: PhyloTree) -> None:
    if t1.leaves != t2.leaves:
        raise LeafSetMismatchError('Trees have different leaf sets')


def _is_agreement_forest(t1: PhyloTree, t2: PhyloTree, moving: Cluster) -> bool:
    # A block is vertex-disjoint from the rho block in t2 only if it is a cluster of t2.
    if moving not in t2.cluster_set:
        return False
    rest = t1.leaves - moving
    if restrict(t1, moving) != restrict(t2, moving):
        return False
    return not rest or restrict(t1, rest) == restrict(t2, rest)


def _agreement_forests(t1: PhyloTree, t2: PhyloTree) -> List[AgreementForest2]:
    # Every vertex of t1 is the head of one arc; the root's arc is the pendant rho arc.
    candidates = sorted(t1.cluster_set, key=cluster_key)
    return [
        AgreementForest2(t1.leaves - moving, moving)
        for moving in candidates
        if _is_agreement_forest(t1, t2, moving)
    ]


def rspr_one(t1: PhyloTree, t2: PhyloTree) -> Set[AgreementForest2]:
    """
    All two-block agreement forests obtained by cutting one arc of t1.

    The result is non-empty exactly when t1 and t2 are one rSPR move apart.

    Raises:
        LeafSetMismatchError: If the leaf sets differ.
        IdenticalTreesError: If the trees are isomorphic.
    """
    _check_pair(t1, t2)
    if t1 == t2:
        raise IdenticalTreesError('Trees are isomorphic (rSPR distance 0)')
    return set(_agreement_forests(t1, t2))


def enclosing_cluster(t1: PhyloTree, t2: PhyloTree, moving: Cluster) -> Cluster:
    """
    The minimal cluster common to both trees that properly contains moving.

    Raises:
        InvariantViolation: If the minimal common clusters are not unique.
    """
    above = [c for c in t1.cluster_set & t2.cluster_set if moving < c]
    if not above:
        raise InvariantViolation(f"No common cluster properly contains {format_cluster(moving)}")
    smallest = min(above, key=len)
    if any(not smallest <= c for c in above):
        raise InvariantViolation(f"Common clusters above {format_cluster(moving)} do not form a chain")
    return smallest


def _moving_pairs(t1: PhyloTree, t2: PhyloTree) -> List[OrderedPair]:
    pairs = [
        OrderedPair(forest.block_other, enclosing_cluster(t1, t2, forest.block_other))
        for forest in _agreement_forests(t1, t2)
    ]
    return sorted(pairs, key=lambda p: p.sort_key)


def moving_subtrees(t1: PhyloTree, t2: PhyloTree) -> FrozenSet[OrderedPair]:
    """
    The ordered pairs (X', Y') of all moving subtrees of two trees one rSPR move apart.

    Raises:
        LeafSetMismatchError: If the leaf sets differ.
        NotDistanceOneError: If the trees are not exactly one rSPR move apart.
    """
    _check_pair(t1, t2)
    pairs = _moving_pairs(t1, t2) if t1 != t2 else []
    if not pairs:
        raise NotDistanceOneError('Trees are not one rSPR move apart')
    return frozenset(pairs)


def distance_one_moves(t1: PhyloTree, t2: PhyloTree) -> List[OrderedPair]:
    """Sorted moving-subtree pairs, or an empty list when d_rSPR(t1, t2) != 1."""
    _check_pair(t1, t2)
    if t1 == t2:
        return []
    return _moving_pairs(t1, t2)


def is_rnni_one(t1: PhyloTree, t2: PhyloTree) -> bool:
    """
    Whether the trees are one rooted NNI apart (three moving subtrees).

    Raises:
        LeafSetMismatchError: If the leaf sets differ.
    """
    return len(distance_one_moves(t1, t2)) == 3
