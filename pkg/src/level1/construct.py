# File: src/level1/construct.py

# -*- coding: utf-8 -*-

"""
Level-1 network reconstruction from a candidate display set.

The decision runs three gates: |P| must be a power of two, the rSPR graph of P
must be a hypercube, and every bit edge subset must admit a verifying pair
compatible with the pairs chosen before it. When all pass, the chosen pairs
drive a sequence of subtree reductions down to a single tree, and the network
is rebuilt from that tree by adding one reticulation arc per pair.
"""

import time
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx
from tqdm import tqdm

from src.display.display_set import display_set
from src.hypercube.recognition import HypercubeMap, hypercube_iso
from src.level1.nested import PairKey, VerifiedLabelling, choose_labelling, labelling_sequences
from src.phylo.exceptions import CapExceededError, InvariantViolation, NotLevel1Error
from src.phylo.network import (
    PhyloNetwork,
    graft_tree_into,
    network_isomorphic,
    subdivide_in_arc,
    tree_to_digraph,
    trivial_reticulations,
    validate,
)
from src.phylo.newick import serialize_enewick, serialize_newick
from src.phylo.tree import Cluster, PhyloTree, cluster_key, format_cluster, restrict, subtree_reduce
from src.rspr.agreement import OrderedPair
from src.rspr.graph import RsprGraph, build_rspr_graph, check_collection
from src.utils.config_defaults import DEFAULT_LIMITS_CONFIG
from src.utils.logging_utils import get_module_logger

# Module logger
logger = get_module_logger("level1.construct")

# Replacement leaves live outside the taxon alphabet accepted by the Newick parser.
REPLACEMENT_PREFIX = '@'


class FailureReason(str, Enum):
    """Why no level-1 network displays exactly the given trees."""

    NOT_POWER_OF_TWO = 'NOT_POWER_OF_TWO'
    NOT_HYPERCUBE = 'NOT_HYPERCUBE'
    NO_NESTED_LABELLING = 'NO_NESTED_LABELLING'


@dataclass(frozen=True)
class ReconstructionResult:
    """Outcome of a reconstruction run, positive or negative."""

    decision: bool
    trees: Tuple[PhyloTree, ...]
    reason: Optional[FailureReason] = None
    k: Optional[int] = None
    graph: Optional[RsprGraph] = None
    hypercube: Optional[HypercubeMap] = None
    labelling: Optional[VerifiedLabelling] = None
    network: Optional[PhyloNetwork] = None
    all_networks: Optional[Tuple[PhyloNetwork, ...]] = None
    sequence_count: Optional[int] = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def chosen_pairs(self) -> Tuple[OrderedPair, ...]:
        return self.labelling.chosen if self.labelling else ()

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'decision': 'yes' if self.decision else 'no',
            'reason': self.reason.value if self.reason else None,
            'k': self.k,
            'bit_subsets': [
                [list(e) for e in sorted(subset)] for subset in self.hypercube.bit_edge_subsets
            ] if self.hypercube else [],
            'chosen_pairs': [pair.to_list() for pair in self.chosen_pairs],
            'network': serialize_enewick(self.network) if self.network else None,
        }
        if self.all_networks is not None:
            data['all_networks'] = [serialize_enewick(n) for n in self.all_networks]
            data['sequence_count'] = self.sequence_count
            data['network_count'] = len(self.all_networks)
        return data


def _exponent(n: int) -> Optional[int]:
    if n < 1 or n & (n - 1):
        return None
    return n.bit_length() - 1


def analyse(
    trees: Sequence[PhyloTree],
    key: Optional[PairKey] = None,
    max_tree_exponent: Optional[int] = None,
    progress: bool = False,
) -> ReconstructionResult:
    """
    Run the decision gates without rebuilding a network.

    Args:
        trees: The candidate display set.
        key: Tie-break for the labelling (defaults to largest moving cluster first).
        max_tree_exponent: Refuse more than 2^max_tree_exponent trees.
        progress: Show a progress bar over the pairwise rSPR tests.

    Returns:
        ReconstructionResult: Decision, reason and the intermediate structures; network is None.

    Raises:
        PhyloError: If the collection is empty, repeats a tree or mixes leaf sets.
        CapExceededError: If there are too many trees.
    """
    start = time.time()
    max_tree_exponent = DEFAULT_LIMITS_CONFIG['max_tree_exponent'] if max_tree_exponent is None else max_tree_exponent
    vertices = check_collection(list(trees))
    if len(vertices) > 2 ** max_tree_exponent:
        raise CapExceededError(
            f"{len(vertices)} trees exceed the limit of 2^{max_tree_exponent}; "
            f"the rSPR graph is quadratic in an exponential blow-up"
        )

    k = _exponent(len(vertices))
    if k is None:
        logger.warning(f"{len(vertices)} trees is not a power of two")
        return ReconstructionResult(False, vertices, FailureReason.NOT_POWER_OF_TWO, elapsed=time.time() - start)
    if k == 0:
        return ReconstructionResult(True, vertices, k=0, elapsed=time.time() - start)

    g = build_rspr_graph(vertices, progress=progress)
    hmap = hypercube_iso(g.graph)
    if hmap is None or hmap.k != k:
        logger.warning(f"rSPR graph on {g.order} trees with {len(g.edge_moves)} edges is not Q_{k}")
        return ReconstructionResult(
            False, vertices, FailureReason.NOT_HYPERCUBE, k=k, graph=g, elapsed=time.time() - start
        )

    labelling = choose_labelling(g, hmap, key=key)
    if labelling is None:
        logger.warning('No labelling satisfies the nested subtree property')
        return ReconstructionResult(
            False, vertices, FailureReason.NO_NESTED_LABELLING, k=k, graph=g, hypercube=hmap,
            elapsed=time.time() - start
        )
    return ReconstructionResult(
        True, vertices, k=k, graph=g, hypercube=hmap, labelling=labelling, elapsed=time.time() - start
    )


def _rewrite(pair: Tuple[Cluster, Cluster], reduced: Cluster, label: str) -> Tuple[Cluster, Cluster]:
    moving, enclosing = pair
    if reduced <= moving:
        return (moving - reduced) | {label}, (enclosing - reduced) | {label}
    if reduced < enclosing and not moving & reduced:
        return moving, (enclosing - reduced) | {label}
    return pair


def _parent_cluster(t: PhyloTree, cluster: Cluster) -> Cluster:
    vertex = t.vertex_of.get(cluster)
    parent = None if vertex is None else t.parent(vertex)
    if parent is None:
        raise InvariantViolation(f"{format_cluster(cluster)} is not a proper cluster of {serialize_newick(t)}")
    return t.clusters[parent]


def _attachment_target(c_t: Cluster, c_s: Cluster, moving: Cluster) -> Cluster:
    if not (c_t - moving) & (c_s - moving) or c_s <= c_t:
        return c_s - moving
    if c_t <= c_s:
        return c_s
    raise InvariantViolation(
        f"Neither attachment case applies for {format_cluster(moving)} "
        f"({format_cluster(c_t)} vs {format_cluster(c_s)})"
    )


def build_network(g: RsprGraph, hmap: HypercubeMap, chosen: Sequence[OrderedPair]) -> PhyloNetwork:
    """
    Rebuild a level-1 network from a verified labelling.

    Args:
        g: rSPR graph of the display set.
        hmap: Its hypercube map.
        chosen: One pair per bit edge subset, in subset order, pairwise compatible.

    Returns:
        PhyloNetwork: A level-1 network without trivial reticulations displaying g's trees.

    Raises:
        InvariantViolation: If the labelling does not behave as a verified one must.
    """
    k = len(chosen)
    bits = sorted(range(k), key=lambda b: cluster_key(chosen[b].enclosing))
    enclosing = [chosen[b].enclosing for b in bits]
    for i in range(k):
        for j in range(i + 1, k):
            if enclosing[i] & enclosing[j] and not enclosing[i] < enclosing[j]:
                raise InvariantViolation('Enclosing clusters are not laminar')

    pairs = [(chosen[b].moving, chosen[b].enclosing) for b in bits]
    reduced: List[List[PhyloTree]] = [[t] for t in g.vertices]
    history: List[List[Tuple[Cluster, Cluster]]] = []
    for i in range(k):
        history.append(list(pairs))
        label = f"{REPLACEMENT_PREFIX}{i + 1}"
        target = pairs[i][1]
        for chain in reduced:
            chain.append(subtree_reduce(chain[-1], target, label))
        pairs = [_rewrite(p, target, label) for p in pairs]

    final = {chain[k] for chain in reduced}
    if len(final) != 1:
        raise InvariantViolation(f"Reductions left {len(final)} distinct trees instead of one")
    net: nx.DiGraph = tree_to_digraph(final.pop())

    for i in reversed(range(k)):
        moving, target = history[i][i]
        t_index = min(range(g.order), key=lambda v: (reduced[v][i].canonical, v))
        s_index = hmap.neighbour(t_index, bits[i])
        t, s = reduced[t_index][i], reduced[s_index][i]
        if restrict(t, target) == restrict(s, target):
            raise InvariantViolation(f"Neighbours agree on {format_cluster(target)}")

        placed = graft_tree_into(net, f"{REPLACEMENT_PREFIX}{i + 1}", restrict(t, target))
        anchor = _attachment_target(_parent_cluster(t, moving), _parent_cluster(s, moving), moving)
        if anchor not in placed or moving not in placed:
            raise InvariantViolation(f"{format_cluster(anchor)} is not a cluster of the grafted subtree")
        tail = subdivide_in_arc(net, placed[anchor])
        head = subdivide_in_arc(net, placed[moving])
        net.add_edge(tail, head)
        logger.debug(f"Reticulation for {format_cluster(moving)} attached below {format_cluster(anchor)}")

    return PhyloNetwork(net)


def _distinct(networks: Sequence[PhyloNetwork]) -> List[PhyloNetwork]:
    by_key: Dict[str, List[PhyloNetwork]] = {}
    for n in networks:
        bucket = by_key.setdefault(n.canonical_key, [])
        if not any(network_isomorphic(n, other) for other in bucket):
            bucket.append(n)
    found = [n for bucket in by_key.values() for n in bucket]
    return sorted(found, key=serialize_enewick)


def reconstruct(
    trees: Sequence[PhyloTree],
    all_networks: bool = False,
    key: Optional[PairKey] = None,
    max_tree_exponent: Optional[int] = None,
    progress: bool = False,
) -> ReconstructionResult:
    """
    Decide whether the trees are the display set of a level-1 network and build one.

    Args:
        trees: The candidate display set.
        all_networks: Also rebuild one network per valid labelling sequence.
        key: Tie-break for the default labelling.
        max_tree_exponent: Refuse more than 2^max_tree_exponent trees.
        progress: Show progress bars.

    Returns:
        ReconstructionResult: With network set when the decision is positive.
    """
    result = analyse(trees, key=key, max_tree_exponent=max_tree_exponent, progress=progress)
    start = time.time()
    if not result.decision:
        return replace(result, all_networks=() if all_networks else None)

    if result.k == 0:
        network = PhyloNetwork.from_tree(result.trees[0])
        return ReconstructionResult(
            True, result.trees, k=0, network=network, all_networks=(network,) if all_networks else None,
            sequence_count=1 if all_networks else None, elapsed=result.elapsed
        )

    network = build_network(result.graph, result.hypercube, result.labelling.chosen)
    everything: Optional[Tuple[PhyloNetwork, ...]] = None
    sequence_count = None
    if all_networks:
        sequences = list(labelling_sequences(result.labelling.candidates))
        built = [
            build_network(result.graph, result.hypercube, seq)
            for seq in tqdm(sequences, disable=not progress, desc='Labellings')
        ]
        everything = tuple(_distinct(built))
        sequence_count = len(sequences)
        logger.debug(f"{sequence_count} labelling sequences gave {len(everything)} distinct networks")

    return ReconstructionResult(
        True, result.trees, k=result.k, graph=result.graph, hypercube=result.hypercube,
        labelling=result.labelling, network=network, all_networks=everything,
        sequence_count=sequence_count, elapsed=result.elapsed + time.time() - start
    )


def construct_level1(trees: Sequence[PhyloTree], key: Optional[PairKey] = None) -> Optional[PhyloNetwork]:
    """A level-1 network whose display set is exactly the trees, or None."""
    return reconstruct(trees, key=key).network


def enumerate_level1(trees: Sequence[PhyloTree]) -> List[PhyloNetwork]:
    """All level-1 networks without trivial reticulations displaying exactly the trees."""
    return list(reconstruct(trees, all_networks=True).all_networks)


def verify_reconstruction(network: PhyloNetwork, trees: Sequence[PhyloTree], cap: Optional[int] = None) -> bool:
    """
    Whether network is level-1, free of trivial reticulations and displays exactly the trees.
    """
    if not validate(network).is_level1:
        return False
    try:
        if trivial_reticulations(network):
            return False
    except NotLevel1Error:
        return False
    return set(display_set(network, cap=cap).trees) == set(trees)
