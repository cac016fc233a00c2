# File: src/display/display_set.py

# -*- coding: utf-8 -*-

"""
Display sets of phylogenetic networks.

Trees embedded in a network are encoded by bit strings: a binary assignment
orders the reticulations and marks one in-arc of each as its 1-arc, and bit i
of a string says which in-arc of the i-th reticulation is kept.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, Mapping, Optional, Tuple

from tqdm import tqdm

from src.phylo.exceptions import CapExceededError, LeafSetMismatchError, PhyloError
from src.phylo.network import Arc, PhyloNetwork
from src.phylo.newick import serialize_newick
from src.phylo.tree import Nested, PhyloTree
from src.utils.config_defaults import DEFAULT_LIMITS_CONFIG
from src.utils.logging_utils import get_module_logger

# Module logger
logger = get_module_logger("display")

BitString = str


@dataclass(frozen=True)
class BinaryAssignment:
    """Ordered reticulations of a network, each with a designated 1-arc and 0-arc."""

    network: PhyloNetwork = field(repr=False, compare=False)
    reticulations: Tuple[int, ...]
    one_arcs: Tuple[Arc, ...]
    zero_arcs: Tuple[Arc, ...]

    def __post_init__(self):
        if not len(self.reticulations) == len(self.one_arcs) == len(self.zero_arcs):
            raise PhyloError('Binary assignment needs one 1-arc and one 0-arc per reticulation')
        if set(self.reticulations) != set(self.network.reticulations):
            raise PhyloError('Binary assignment must cover every reticulation exactly once')
        for r, one, zero in zip(self.reticulations, self.one_arcs, self.zero_arcs):
            in_arcs = {(p, r) for p in self.network.parents(r)}
            if {one, zero} != in_arcs:
                raise PhyloError(f"Arcs {one} and {zero} are not the two in-arcs of reticulation {r}")

    @classmethod
    def for_network(cls, network: PhyloNetwork) -> 'BinaryAssignment':
        """
        The default assignment: reticulations in canonical topological order; the
        in-arc whose tail has the lexicographically smaller cluster is the 0-arc.
        """
        ones, zeros = [], []
        for r in network.reticulations:
            zero_tail, one_tail = sorted(
                network.parents(r),
                key=lambda p: (tuple(sorted(network.cluster(p))), network.structure_code[p])
            )
            zeros.append((zero_tail, r))
            ones.append((one_tail, r))
        return cls(network, network.reticulations, tuple(ones), tuple(zeros))

    @property
    def k(self) -> int:
        return len(self.reticulations)


def encode_tree(network: PhyloNetwork, phi: BinaryAssignment, bits: BitString) -> PhyloTree:
    """
    The tree encoded by a bit string under a binary assignment.

    Keeps the 1-arc of the i-th reticulation iff bit i is '1', then cleans up:
    dead ends are dropped and unary vertices suppressed.

    Raises:
        PhyloError: If the string length differs from the reticulation count or
            holds characters other than 0 and 1.
    """
    if len(bits) != phi.k:
        raise PhyloError(f"Bit string {bits!r} has length {len(bits)}, expected {phi.k}")
    if set(bits) - {'0', '1'}:
        raise PhyloError(f"Bit string {bits!r} must contain only 0 and 1")

    dropped = {
        zero if bit == '1' else one
        for bit, one, zero in zip(bits, phi.one_arcs, phi.zero_arcs)
    }

    def nested(v: int) -> Optional[Nested]:
        label = network.label(v)
        if label is not None:
            return label
        kept = [nested(c) for c in network.children(v) if (v, c) not in dropped]
        kept = [node for node in kept if node is not None]
        if not kept:
            return None
        if len(kept) == 1:
            return kept[0]
        return kept[0], kept[1]

    return PhyloTree.from_nested(nested(network.root))


@dataclass(frozen=True)
class DisplaySet:
    """Deduplicated trees displayed by a network, with the encoding of every bit string."""

    k: int
    trees: Tuple[PhyloTree, ...]
    encodings: Mapping[BitString, int]

    @property
    def size(self) -> int:
        return len(self.trees)

    @property
    def is_maximum(self) -> bool:
        return self.size == 2 ** self.k

    def tree_for(self, bits: BitString) -> PhyloTree:
        return self.trees[self.encodings[bits]]

    def __contains__(self, tree: PhyloTree) -> bool:
        return tree in self.trees

    def __len__(self) -> int:
        return len(self.trees)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'k': self.k,
            'size': self.size,
            'maximum': self.is_maximum,
            'trees': [serialize_newick(t) for t in self.trees],
            'encodings': {bits: self.encodings[bits] for bits in sorted(self.encodings)},
        }


def display_set(network: PhyloNetwork, cap: Optional[int] = None, progress: bool = False) -> DisplaySet:
    """
    Enumerate all 2^k encodings of a network and deduplicate the trees.

    Args:
        network: The network.
        cap: Largest reticulation count accepted (defaults to the configured cap).
        progress: Show a progress bar.

    Raises:
        CapExceededError: If the network has more reticulations than the cap.
    """
    cap = DEFAULT_LIMITS_CONFIG['display_cap'] if cap is None else cap
    k = network.reticulation_count
    if k > cap:
        raise CapExceededError(
            f"Network has {k} reticulations; enumerating 2^{k} encodings is an exponential "
            f"blow-up beyond the cap of {cap}"
        )

    phi = BinaryAssignment.for_network(network)
    by_string: Dict[BitString, PhyloTree] = {}
    strings = (''.join(bits) for bits in product('01', repeat=k))
    for bits in tqdm(strings, total=2 ** k, disable=not progress, desc='Encodings'):
        by_string[bits] = encode_tree(network, phi, bits)

    trees = tuple(sorted(set(by_string.values()), key=lambda t: t.canonical))
    index = {tree: i for i, tree in enumerate(trees)}
    logger.debug(f"Display set: k={k}, {len(trees)} distinct trees")
    return DisplaySet(k, trees, {bits: index[tree] for bits, tree in by_string.items()})


def is_displayed(network: PhyloNetwork, tree: PhyloTree, cap: Optional[int] = None) -> bool:
    """
    Whether tree is in the display set of network.

    Raises:
        LeafSetMismatchError: If the leaf sets differ.
    """
    if network.leaves != tree.leaves:
        raise LeafSetMismatchError('Tree and network have different leaf sets')
    return tree in display_set(network, cap=cap)
