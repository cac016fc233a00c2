# File: src/level1/nested.py

# -*- coding: utf-8 -*-

"""
Nested subtree property: verifying pairs per bit edge subset and the greedy
choice of one compatible pair per subset.
"""

from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Any, Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from src.hypercube.recognition import HypercubeMap
from src.phylo.exceptions import PhyloError
from src.phylo.tree import cluster_key
from src.rspr.agreement import OrderedPair
from src.rspr.graph import Edge, RsprGraph
from src.utils.logging_utils import get_module_logger

# Module logger
logger = get_module_logger("level1.nested")

PairKey = Callable[[OrderedPair], Any]

TIE_BREAK_KEYS: Dict[str, PairKey] = {
    # Largest moving cluster first, then lexicographic.
    'largest': lambda pair: (-len(pair.moving), tuple(sorted(pair.moving))),
    'smallest': lambda pair: cluster_key(pair.moving),
}


class NestedRelation(Enum):
    """Which nested-subtree condition two ordered pairs satisfy."""

    DISJOINT = 'I'
    CONTAINED_IN_MOVING = 'II'
    NESTED_AVOIDING = 'III'
    NONE = 'none'


def _relation_one_way(p: OrderedPair, q: OrderedPair) -> NestedRelation:
    if not p.enclosing & q.enclosing:
        return NestedRelation.DISJOINT
    if p.enclosing <= q.moving:
        return NestedRelation.CONTAINED_IN_MOVING
    if p.enclosing < q.enclosing and not q.moving & p.enclosing:
        return NestedRelation.NESTED_AVOIDING
    return NestedRelation.NONE


def nested_relation(p: OrderedPair, q: OrderedPair) -> NestedRelation:
    """
    The condition (I), (II) or (III) met by p and q in either order.

    Raises:
        PhyloError: If p and q are the same pair.
    """
    if p == q:
        raise PhyloError(f"Cannot relate pair {p} to itself")
    forward = _relation_one_way(p, q)
    if forward is not NestedRelation.NONE:
        return forward
    return _relation_one_way(q, p)


def compatible(p: OrderedPair, q: OrderedPair) -> bool:
    return p != q and nested_relation(p, q) is not NestedRelation.NONE


def verifying_pairs(g: RsprGraph, subset: FrozenSet[Edge]) -> List[OrderedPair]:
    """Ordered pairs common to the move sets of every edge in subset, sorted."""
    if not subset:
        return []
    common = reduce(
        lambda acc, e: acc & frozenset(g.moves(*e)),
        subset,
        frozenset(g.moves(*next(iter(subset)))),
    )
    return sorted(common, key=lambda pair: pair.sort_key)


@dataclass(frozen=True)
class VerifiedLabelling:
    """
    Verifying pairs of every bit edge subset plus one chosen, pairwise compatible pair each.

    Attributes:
        candidates: Verifying pairs per bit edge subset, in subset order.
        chosen: The chosen (X_i, Y_i), in subset order.
    """

    candidates: Tuple[Tuple[OrderedPair, ...], ...]
    chosen: Tuple[OrderedPair, ...]

    @property
    def k(self) -> int:
        return len(self.chosen)

    @property
    def choice_counts(self) -> List[int]:
        return [len(c) for c in self.candidates]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'candidates': [[pair.to_list() for pair in c] for c in self.candidates],
            'chosen_pairs': [pair.to_list() for pair in self.chosen],
        }


def candidate_pairs(g: RsprGraph, hmap: HypercubeMap) -> Tuple[Tuple[OrderedPair, ...], ...]:
    return tuple(tuple(verifying_pairs(g, subset)) for subset in hmap.bit_edge_subsets)


def choose_labelling(g: RsprGraph, hmap: HypercubeMap, key: Optional[PairKey] = None) -> Optional[VerifiedLabelling]:
    """
    Pick, subset by subset, a verifying pair compatible with all earlier choices.

    Args:
        g: rSPR graph isomorphic to Q_k.
        hmap: Its hypercube map.
        key: Sort key ranking the compatible pairs (defaults to largest moving cluster first).

    Returns:
        Optional[VerifiedLabelling]: None when some subset has no compatible verifying pair.
    """
    key = TIE_BREAK_KEYS['largest'] if key is None else key
    candidates = candidate_pairs(g, hmap)
    chosen: List[OrderedPair] = []
    for i, pairs in enumerate(candidates):
        options = [p for p in pairs if all(compatible(p, q) for q in chosen)]
        if not options:
            logger.debug(f"Bit edge subset {i} has {len(pairs)} verifying pairs, none compatible")
            return None
        chosen.append(min(options, key=key))
    logger.debug(f"Chosen pairs: {', '.join(str(p) for p in chosen)}")
    return VerifiedLabelling(candidates, tuple(chosen))


def labelling_sequences(candidates: Sequence[Sequence[OrderedPair]]) -> Iterator[Tuple[OrderedPair, ...]]:
    """Every choice of one pair per subset with all chosen pairs pairwise compatible."""
    chosen: List[OrderedPair] = []

    def extend(i: int) -> Iterator[Tuple[OrderedPair, ...]]:
        if i == len(candidates):
            yield tuple(chosen)
            return
        for p in candidates[i]:
            if all(compatible(p, q) for q in chosen):
                chosen.append(p)
                yield from extend(i + 1)
                chosen.pop()

    return extend(0)
