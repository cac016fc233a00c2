# File: src/hypercube/recognition.py

# -*- coding: utf-8 -*-

"""
Hypercube recognition and bit edge subsets.

A graph on 2^k vertices is recognised as Q_k by labelling the neighbours of a
base vertex with unit strings and propagating outwards in BFS layers: a vertex
at distance d must have exactly d neighbours one layer closer, and its label is
the bitwise OR of theirs. The result is then checked edge by edge.

Bit positions are canonical: E_i are ordered by their smallest edge, so two
isomorphisms of the same graph give the same partition in the same order.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Hashable, List, Optional, Sequence, Tuple

import networkx as nx

from src.hypercube.gray import gray_code
from src.phylo.exceptions import NotHypercubeError, PhyloError
from src.utils.logging_utils import get_module_logger

# Module logger
logger = get_module_logger("hypercube")

Vertex = Hashable
Edge = Tuple[Vertex, Vertex]


def _edge(u: Vertex, v: Vertex) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class HypercubeMap:
    """
    Isomorphism of a graph onto Q_k.

    Attributes:
        k: Dimension.
        vertex_to_string: Bijection from graph vertices to k-bit strings.
        bit_edge_subsets: E_1..E_k; E_i holds the edges whose endpoint strings differ at position i.
    """

    k: int
    vertex_to_string: Dict[Vertex, str]
    bit_edge_subsets: Tuple[FrozenSet[Edge], ...]

    @cached_property
    def string_to_vertex(self) -> Dict[str, Vertex]:
        return {s: v for v, s in self.vertex_to_string.items()}

    def bit_of(self, u: Vertex, v: Vertex) -> int:
        """Index of the bit edge subset holding edge uv."""
        target = _edge(u, v)
        for i, subset in enumerate(self.bit_edge_subsets):
            if target in subset:
                return i
        raise KeyError(f"{target} is not an edge of the hypercube")

    def neighbour(self, v: Vertex, i: int) -> Vertex:
        """The vertex across E_i from v."""
        s = self.vertex_to_string[v]
        flipped = s[:i] + ('1' if s[i] == '0' else '0') + s[i + 1:]
        return self.string_to_vertex[flipped]

    def to_dict(self) -> Dict[str, object]:
        return {
            'k': self.k,
            'strings': {str(v): s for v, s in sorted(self.vertex_to_string.items())},
            'bit_edge_subsets': [sorted(list(e) for e in subset) for subset in self.bit_edge_subsets],
        }


def _power_of_two_exponent(n: int) -> Optional[int]:
    if n < 1 or n & (n - 1):
        return None
    return n.bit_length() - 1


def _labels(g: nx.Graph, k: int) -> Optional[Dict[Vertex, int]]:
    base = min(g.nodes)
    labels: Dict[Vertex, int] = {base: 0}
    for j, v in enumerate(sorted(g[base])):
        labels[v] = 1 << j

    distance = nx.single_source_shortest_path_length(g, base)
    for v in sorted(g.nodes, key=lambda x: (distance[x], x)):
        d = distance[v]
        if d < 2:
            continue
        lower = [u for u in g[v] if distance[u] == d - 1]
        if len(lower) != d:
            return None
        label = 0
        for u in lower:
            label |= labels[u]
        if bin(label).count('1') != d:
            return None
        labels[v] = label
    return labels


def _is_hamming_one(x: int) -> bool:
    return x != 0 and x & (x - 1) == 0


def hypercube_iso(g: nx.Graph) -> Optional[HypercubeMap]:
    """
    Recognise g as a hypercube.

    Args:
        g: Simple undirected graph with sortable vertices.

    Returns:
        Optional[HypercubeMap]: The map when g is isomorphic to Q_k, otherwise None.
    """
    n = g.number_of_nodes()
    k = _power_of_two_exponent(n)
    if k is None:
        logger.debug(f"{n} vertices is not a power of two")
        return None
    if k == 0:
        return HypercubeMap(0, {next(iter(g.nodes)): ''}, ())
    if g.number_of_edges() != n * k // 2 or any(d != k for _, d in g.degree):
        logger.debug(f"Graph on {n} vertices is not {k}-regular with {n * k // 2} edges")
        return None
    if not nx.is_connected(g):
        return None

    if k == 1:
        u, v = sorted(g.nodes)
        return HypercubeMap(1, {u: '0', v: '1'}, (frozenset({(u, v)}),))

    labels = _labels(g, k)
    if labels is None or set(labels.values()) != set(range(n)):
        logger.debug('Layer propagation did not produce a bijection onto k-bit strings')
        return None

    by_bit: Dict[int, List[Edge]] = {}
    for u, v in g.edges:
        diff = labels[u] ^ labels[v]
        if not _is_hamming_one(diff):
            return None
        by_bit.setdefault(diff.bit_length() - 1, []).append(_edge(u, v))
    if len(by_bit) != k:
        return None

    order = sorted(by_bit, key=lambda bit: min(by_bit[bit]))
    subsets = tuple(frozenset(by_bit[bit]) for bit in order)
    strings = {
        v: ''.join('1' if label >> bit & 1 else '0' for bit in order)
        for v, label in labels.items()
    }
    logger.debug(f"Recognised Q_{k} on {n} vertices")
    return HypercubeMap(k, strings, subsets)


def _check_cycle(g: nx.Graph, cycle: Sequence[Vertex]) -> List[Vertex]:
    cycle = list(cycle)
    if len(cycle) > 1 and cycle[0] == cycle[-1]:
        cycle = cycle[:-1]
    if len(cycle) != g.number_of_nodes() or set(cycle) != set(g.nodes):
        raise PhyloError('Vertex sequence does not visit every vertex exactly once')
    n = len(cycle)
    for i in range(n):
        if not g.has_edge(cycle[i], cycle[(i + 1) % n]):
            raise PhyloError(f"{cycle[i]} and {cycle[(i + 1) % n]} are consecutive but not adjacent")
    return cycle


def bit_edge_subset_from_seed(g: nx.Graph, cycle: Sequence[Vertex], f1: Edge) -> FrozenSet[Edge]:
    """
    Recover the bit edge subset containing f1 by walking a Hamilton cycle.

    At each step the current edge f_i at v_i is carried to v_{i+1}: it stays
    when it is the cycle edge e_i, otherwise it moves to the edge that closes
    the unique 4-cycle through f_i and e_i.

    Args:
        g: Graph isomorphic to Q_k with k >= 2.
        cycle: Hamilton cycle v_1..v_n (closing repeat of v_1 optional).
        f1: Edge incident with v_1.

    Returns:
        FrozenSet[Edge]: The bit edge subset, as canonically ordered edges.

    Raises:
        PhyloError: If cycle is not a Hamilton cycle or f1 is not an edge at v_1.
        NotHypercubeError: If g is too small or a 4-cycle closure is missing or ambiguous.
    """
    if g.number_of_nodes() < 4:
        raise NotHypercubeError('Bit edge subsets from a seed need k >= 2')
    cycle = _check_cycle(g, cycle)
    n = len(cycle)
    if cycle[0] not in f1 or not g.has_edge(*f1):
        raise PhyloError(f"{f1} is not an edge at the cycle start {cycle[0]}")

    found = set()
    other = f1[1] if f1[0] == cycle[0] else f1[0]
    for i in range(n):
        v, nxt = cycle[i], cycle[(i + 1) % n]
        found.add(_edge(v, other))
        if other == nxt:
            other = v
            continue
        closing = (set(g[other]) & set(g[nxt])) - {v}
        if len(closing) != 1:
            raise NotHypercubeError(f"No unique 4-cycle through {v}-{other} and {v}-{nxt}")
        other = closing.pop()

    if _edge(cycle[0], other) != _edge(*f1) or len(found) != n // 2:
        raise NotHypercubeError('Walk around the cycle did not close up on a perfect matching')
    return frozenset(found)


def hamilton_cycle(g: nx.Graph, hmap: HypercubeMap) -> List[Vertex]:
    """
    A Hamilton cycle of g: the reflected Gray code pulled back through the map.

    The cycle closes from the last vertex back to the first.

    Raises:
        NotHypercubeError: If k < 2.
    """
    if hmap.k < 2:
        raise NotHypercubeError(f"Q_{hmap.k} has no Hamilton cycle")
    return [hmap.string_to_vertex[s] for s in gray_code(hmap.k)]


def split_on_subset(g: nx.Graph, subset: FrozenSet[Edge]) -> Tuple[FrozenSet[Vertex], FrozenSet[Vertex]]:
    """
    The two halves of g left after deleting one bit edge subset, smallest vertex first.

    Raises:
        NotHypercubeError: If deleting the edges does not leave exactly two components.
    """
    rest = nx.Graph(g)
    rest.remove_edges_from(subset)
    parts = sorted((frozenset(c) for c in nx.connected_components(rest)), key=min)
    if len(parts) != 2:
        raise NotHypercubeError(f"Deleting the subset leaves {len(parts)} components, not two")
    return parts[0], parts[1]
