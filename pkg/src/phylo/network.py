# File: src/phylo/network.py

# -*- coding: utf-8 -*-

"""
Rooted binary phylogenetic networks.

PhyloNetwork wraps a frozen networkx DiGraph whose leaves carry a 'label'
attribute. Besides the value type this module holds the class predicates
(tree-child, normal, level-1), source vertices, the essential level-1 network,
DOT export, and the small graph surgery helpers used when networks are built
up incrementally.
"""

import hashlib
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, FrozenSet, List, Optional, Set, Tuple

import networkx as nx

from src.phylo.exceptions import (
    DuplicateTaxonError,
    InvalidNetworkError,
    NotLevel1Error,
)
from src.phylo.tree import Cluster, PhyloTree, Taxon
from src.utils.logging_utils import get_module_logger

# Module logger
logger = get_module_logger("phylo.network")

Arc = Tuple[int, int]


def _digest(*parts: Any) -> str:
    return hashlib.blake2b(repr(parts).encode(), digest_size=12).hexdigest()


def _check_structure(graph: nx.DiGraph) -> int:
    """Validate the network invariants and return the root."""
    n = graph.number_of_nodes()
    if n == 0:
        raise InvalidNetworkError('A network needs at least one vertex')
    if nx.number_of_selfloops(graph):
        raise InvalidNetworkError('Network has a loop')
    if not nx.is_directed_acyclic_graph(graph):
        raise InvalidNetworkError('Network contains a directed cycle')

    roots = [v for v in graph if graph.in_degree(v) == 0]
    if len(roots) != 1:
        raise InvalidNetworkError(f"Network must have exactly one root, found {len(roots)}")
    root = roots[0]

    labels: Set[Taxon] = set()
    for v in graph:
        indeg, outdeg = graph.in_degree(v), graph.out_degree(v)
        label = graph.nodes[v].get('label')
        if outdeg == 0:
            if not label:
                raise InvalidNetworkError(f"Leaf {v} has no label")
            if indeg != 1 and not (n == 1 and v == root):
                raise InvalidNetworkError(f"Leaf {label!r} has in-degree {indeg}")
            if label in labels:
                raise DuplicateTaxonError(f"Duplicate taxon label {label!r}")
            labels.add(label)
            continue
        if label is not None:
            raise InvalidNetworkError(f"Internal vertex {v} carries label {label!r}")
        if v == root:
            if outdeg != 2:
                raise InvalidNetworkError(f"Root has out-degree {outdeg}")
        elif (indeg, outdeg) not in ((1, 2), (2, 1)):
            raise InvalidNetworkError(f"Vertex {v} has in-degree {indeg} and out-degree {outdeg}")
    return root


class PhyloNetwork:
    """Rooted binary phylogenetic network; immutable once built."""

    def __init__(self, graph: nx.DiGraph):
        """
        Validate a directed graph and wrap a frozen copy of it.

        Raises:
            InvalidNetworkError: If the graph breaks a network invariant.
            DuplicateTaxonError: If two leaves share a label.
        """
        graph = nx.DiGraph(graph)
        self._root = _check_structure(graph)
        self._graph = nx.freeze(graph)

    @classmethod
    def from_tree(cls, tree: PhyloTree) -> 'PhyloNetwork':
        return cls(tree_to_digraph(tree))

    # Structure

    @property
    def graph(self) -> nx.DiGraph:
        """The underlying frozen graph."""
        return self._graph

    @property
    def root(self) -> int:
        return self._root

    def children(self, v: int) -> List[int]:
        return list(self._graph.successors(v))

    def parents(self, v: int) -> List[int]:
        return list(self._graph.predecessors(v))

    def is_leaf(self, v: int) -> bool:
        return self._graph.out_degree(v) == 0

    def is_reticulation(self, v: int) -> bool:
        return self._graph.in_degree(v) == 2

    def label(self, v: int) -> Optional[Taxon]:
        return self._graph.nodes[v].get('label')

    @cached_property
    def leaf_vertex(self) -> Dict[Taxon, int]:
        return {data['label']: v for v, data in self._graph.nodes(data=True) if 'label' in data}

    @property
    def leaves(self) -> FrozenSet[Taxon]:
        return frozenset(self.leaf_vertex)

    @cached_property
    def arcs(self) -> Tuple[Arc, ...]:
        return tuple(sorted(self._graph.edges()))

    @cached_property
    def clusters(self) -> Dict[int, Cluster]:
        """Taxa reachable from each vertex."""
        result: Dict[int, Cluster] = {}
        for v in reversed(list(nx.topological_sort(self._graph))):
            label = self.label(v)
            if label is not None:
                result[v] = frozenset((label,))
            else:
                result[v] = frozenset().union(*(result[c] for c in self._graph.successors(v)))
        return result

    def cluster(self, v: int) -> Cluster:
        return self.clusters[v]

    def min_label(self, v: int) -> Taxon:
        return min(self.clusters[v])

    @cached_property
    def reticulations(self) -> Tuple[int, ...]:
        """Reticulations in topological order, ties broken by least taxon below."""
        order = nx.lexicographical_topological_sort(
            self._graph, key=lambda v: (self.min_label(v), self.structure_code[v])
        )
        return tuple(v for v in order if self.is_reticulation(v))

    @property
    def reticulation_count(self) -> int:
        return len(self.reticulations)

    @property
    def is_tree(self) -> bool:
        return not self.reticulations

    def to_tree(self) -> PhyloTree:
        """The network as a PhyloTree; only valid without reticulations."""
        if not self.is_tree:
            raise InvalidNetworkError('Network has reticulations and is not a tree')

        def nested(v: int):
            label = self.label(v)
            if label is not None:
                return label
            first, second = self.children(v)
            return nested(first), nested(second)

        return PhyloTree.from_nested(nested(self._root))

    # Canonical codes

    @cached_property
    def structure_code(self) -> Dict[int, str]:
        """Digest of the sub-network hanging below each vertex."""
        codes: Dict[int, str] = {}
        for v in reversed(list(nx.topological_sort(self._graph))):
            label = self.label(v)
            if label is not None:
                codes[v] = _digest('leaf', label)
            else:
                kind = 'ret' if self.is_reticulation(v) else 'tree'
                codes[v] = _digest(kind, sorted(codes[c] for c in self._graph.successors(v)))
        return codes

    def order_key(self, v: int) -> Tuple[Taxon, str]:
        """Canonical ordering key among siblings."""
        return self.min_label(v), self.structure_code[v]

    @cached_property
    def canonical_key(self) -> str:
        """
        Isomorphism-invariant digest of the network.

        Each vertex is described by its downward code refined with the codes of
        its parents; the key hashes the multiset of arc descriptions.
        """
        down = self.structure_code
        refined: Dict[int, str] = {}
        for v in nx.topological_sort(self._graph):
            refined[v] = _digest(down[v], sorted(refined[p] for p in self._graph.predecessors(v)))
        arcs = sorted((refined[u], refined[v]) for u, v in self._graph.edges())
        return _digest(sorted(refined.values()), arcs)

    def __repr__(self) -> str:
        from src.phylo.newick import serialize_enewick
        return f"PhyloNetwork('{serialize_enewick(self)}')"


def network_isomorphic(n1: PhyloNetwork, n2: PhyloNetwork) -> bool:
    """Exact leaf-label preserving isomorphism test."""
    if n1.leaves != n2.leaves or n1.canonical_key != n2.canonical_key:
        return False
    return nx.is_isomorphic(
        n1.graph, n2.graph,
        node_match=lambda a, b: a.get('label') == b.get('label')
    )


@dataclass(frozen=True)
class NetworkClassification:
    """Class membership of a network."""

    is_tree_child: bool
    is_normal: bool
    is_level1: bool
    shortcuts: FrozenSet[Arc]
    reticulation_count: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'reticulation_count': self.reticulation_count,
            'is_tree_child': self.is_tree_child,
            'is_normal': self.is_normal,
            'is_level1': self.is_level1,
            'shortcuts': [list(arc) for arc in sorted(self.shortcuts)],
        }


def reticulation_blocks(network: PhyloNetwork) -> List[Tuple[FrozenSet[int], Tuple[int, ...]]]:
    """
    Biconnected components of the underlying graph that contain reticulations.

    Returns:
        For each such block, its vertex set and the reticulations whose two
        in-arcs lie in it.
    """
    undirected = network.graph.to_undirected(as_view=True)
    blocks: List[Tuple[FrozenSet[int], Tuple[int, ...]]] = []
    owner: Dict[FrozenSet[int], int] = {}
    edge_sets = list(nx.biconnected_component_edges(undirected))
    for index, edges in enumerate(edge_sets):
        for u, v in edges:
            owner[frozenset((u, v))] = index

    members: Dict[int, List[int]] = {}
    for r in network.reticulations:
        p = network.parents(r)[0]
        members.setdefault(owner[frozenset((p, r))], []).append(r)

    for index, rets in sorted(members.items()):
        vertices = frozenset(x for edge in edge_sets[index] for x in edge)
        blocks.append((vertices, tuple(rets)))
    return blocks


def _is_level1(network: PhyloNetwork) -> bool:
    return all(len(rets) <= 1 for _, rets in reticulation_blocks(network))


def shortcuts(network: PhyloNetwork) -> FrozenSet[Arc]:
    """Reticulation arcs (u, v) bypassed by another directed path from u to v."""
    found: Set[Arc] = set()
    for v in network.reticulations:
        p1, p2 = network.parents(v)
        for u, other in ((p1, p2), (p2, p1)):
            if nx.has_path(network.graph, u, other):
                found.add((u, v))
    return frozenset(found)


def validate(network: PhyloNetwork) -> NetworkClassification:
    """Compute the tree-child, normal and level-1 predicates of a network."""
    tree_child = all(
        any(not network.is_reticulation(c) for c in network.children(v))
        for v in network.graph
        if not network.is_leaf(v)
    )
    found = shortcuts(network)
    return NetworkClassification(
        is_tree_child=tree_child,
        is_normal=tree_child and not found,
        is_level1=_is_level1(network),
        shortcuts=found,
        reticulation_count=network.reticulation_count,
    )


def _require_level1(network: PhyloNetwork) -> List[Tuple[FrozenSet[int], Tuple[int, ...]]]:
    blocks = reticulation_blocks(network)
    if any(len(rets) > 1 for _, rets in blocks):
        raise NotLevel1Error('Network is not level-1')
    return blocks


def _cycle_of(blocks, v: int) -> FrozenSet[int]:
    for vertices, rets in blocks:
        if v in rets:
            return vertices
    raise InvalidNetworkError(f"Vertex {v} is not a reticulation")


def _source_in_cycle(network: PhyloNetwork, cycle: FrozenSet[int]) -> int:
    sources = [w for w in cycle if not any(p in cycle for p in network.parents(w))]
    if len(sources) != 1:
        raise NotLevel1Error('Reticulation cycle has no unique source vertex')
    return sources[0]


def source_vertex(network: PhyloNetwork, v: int) -> int:
    """
    The vertex of v's cycle that has no in-arc on the cycle.

    Raises:
        NotLevel1Error: If the network is not level-1.
        InvalidNetworkError: If v is not a reticulation.
    """
    blocks = _require_level1(network)
    return _source_in_cycle(network, _cycle_of(blocks, v))


def reticulation_source_pairs(network: PhyloNetwork) -> List[Tuple[Cluster, Cluster]]:
    """(C(v), C(u)) for each reticulation v and its source u of a level-1 network."""
    return [(network.cluster(v), network.cluster(source_vertex(network, v))) for v in network.reticulations]


def trivial_reticulations(network: PhyloNetwork) -> List[int]:
    """Reticulations whose cycle has exactly three vertices."""
    return [rets[0] for vertices, rets in _require_level1(network) if len(vertices) == 3]


def essential_network(network: PhyloNetwork) -> PhyloNetwork:
    """
    Remove every trivial reticulation of a level-1 network.

    The deleted in-arc is the one from the non-source parent, so the root is
    never touched; the display set is unchanged.

    Raises:
        NotLevel1Error: If the network is not level-1.
    """
    blocks = _require_level1(network)
    graph = nx.DiGraph(network.graph)
    current = network
    removed = 0
    while True:
        trivial = [(vertices, rets[0]) for vertices, rets in blocks if len(vertices) == 3]
        if not trivial:
            break
        vertices, r = trivial[0]
        source = _source_in_cycle(current, vertices)
        (middle,) = [p for p in current.parents(r) if p != source]
        graph.remove_edge(middle, r)
        suppress_vertex(graph, middle)
        suppress_vertex(graph, r)
        removed += 1
        current = PhyloNetwork(graph)
        blocks = reticulation_blocks(current)

    if removed:
        logger.debug(f"Removed {removed} trivial reticulations")
    return current


# Graph surgery on mutable DiGraphs

def tree_to_digraph(tree: PhyloTree, offset: int = 0) -> nx.DiGraph:
    """A tree as a DiGraph with vertex ids shifted by offset."""
    graph = nx.DiGraph()
    for v in range(tree.size):
        label = tree.label(v)
        if label is None:
            graph.add_node(v + offset)
        else:
            graph.add_node(v + offset, label=label)
    for v in range(tree.size):
        for c in tree.children(v):
            graph.add_edge(v + offset, c + offset)
    return graph


def _fresh_id(graph: nx.DiGraph) -> int:
    return max(graph.nodes, default=-1) + 1


def suppress_vertex(graph: nx.DiGraph, v: int) -> None:
    """Remove an in-1/out-1 vertex, joining its parent to its child."""
    (p,) = graph.predecessors(v)
    (c,) = graph.successors(v)
    graph.remove_node(v)
    graph.add_edge(p, c)


def subdivide_in_arc(graph: nx.DiGraph, v: int) -> int:
    """
    Insert a new vertex on the arc into v.

    A vertex without parents is treated as hanging from the root's pendant arc:
    the new vertex becomes the root.
    """
    parents = list(graph.predecessors(v))
    if len(parents) > 1:
        raise InvalidNetworkError(f"Vertex {v} has more than one in-arc")
    w = _fresh_id(graph)
    graph.add_node(w)
    if parents:
        graph.remove_edge(parents[0], v)
        graph.add_edge(parents[0], w)
    graph.add_edge(w, v)
    return w


def graft_tree_into(graph: nx.DiGraph, leaf: Taxon, tree: PhyloTree) -> Dict[Cluster, int]:
    """
    Replace the leaf with the given label by a copy of tree.

    Returns:
        Map from each cluster of the grafted tree to its new vertex.
    """
    matches = [v for v, data in graph.nodes(data=True) if data.get('label') == leaf]
    if len(matches) != 1:
        raise InvalidNetworkError(f"Leaf {leaf!r} not found exactly once")
    old = matches[0]
    offset = _fresh_id(graph)
    parents = list(graph.predecessors(old))
    graph.remove_node(old)
    graph.update(tree_to_digraph(tree, offset))
    for p in parents:
        graph.add_edge(p, tree.root + offset)
    return {cluster: v + offset for cluster, v in tree.vertex_of.items()}


def network_to_dot(network: PhyloNetwork, name: str = 'network') -> str:
    """DOT rendering: directed arcs, reticulations as boxes, labelled leaves."""
    lines = [f"digraph {name} {{", '  node [shape=circle, label="", width=0.15];']
    for v in sorted(network.graph.nodes):
        if network.is_leaf(v):
            lines.append(f'  {v} [shape=plaintext, label="{network.label(v)}"];')
        elif network.is_reticulation(v):
            lines.append(f'  {v} [shape=box, width=0.2, height=0.2];')
        elif v == network.root:
            lines.append(f'  {v} [shape=doublecircle];')
    for u, v in network.arcs:
        lines.append(f"  {u} -> {v};")
    lines.append('}')
    return '\n'.join(lines) + '\n'
