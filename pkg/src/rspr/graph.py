# File: src/rspr/graph.py

# -*- coding: utf-8 -*-

"""
rSPR graphs: trees as vertices, an edge for every pair one rSPR move apart,
each edge carrying its full set of ordered pairs.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
from tqdm import tqdm

from src.phylo.exceptions import DuplicateTreeError, LeafSetMismatchError, PhyloError
from src.phylo.newick import serialize_newick
from src.phylo.tree import PhyloTree
from src.rspr.agreement import OrderedPair, distance_one_moves
from src.utils.logging_utils import get_module_logger

# Module logger
logger = get_module_logger("rspr.graph")

Edge = Tuple[int, int]

_BIT_COLOURS = ('red', 'blue', 'darkgreen', 'orange', 'purple', 'brown', 'magenta', 'cyan')


def edge(u: int, v: int) -> Edge:
    """Canonical (smaller, larger) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class RsprGraph:
    """Vertices are canonically sorted trees; edges join trees at rSPR distance one."""

    vertices: Tuple[PhyloTree, ...]
    edge_moves: Mapping[Edge, Tuple[OrderedPair, ...]]
    pairs_tested: int = field(default=0, compare=False)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> List[Edge]:
        return sorted(self.edge_moves)

    def moves(self, u: int, v: int) -> Tuple[OrderedPair, ...]:
        return self.edge_moves[edge(u, v)]

    @cached_property
    def index(self) -> Dict[PhyloTree, int]:
        return {tree: i for i, tree in enumerate(self.vertices)}

    @cached_property
    def graph(self) -> nx.Graph:
        """The graph as networkx, with the move tuple on each edge."""
        g = nx.Graph()
        g.add_nodes_from(range(self.order))
        for (u, v), moves in self.edge_moves.items():
            g.add_edge(u, v, moves=moves)
        return nx.freeze(g)

    def to_dict(self, bit_subsets: Optional[Sequence[Iterable[Edge]]] = None) -> Dict[str, Any]:
        bit_of = _bit_index(bit_subsets)
        edges = []
        for u, v in self.edges:
            entry: Dict[str, Any] = {
                'u': u,
                'v': v,
                'moves': [pair.to_list() for pair in self.edge_moves[(u, v)]],
            }
            if bit_of:
                entry['bit'] = bit_of.get((u, v))
            edges.append(entry)
        return {
            'vertices': [serialize_newick(t) for t in self.vertices],
            'edges': edges,
        }

    def to_dot(self, bit_subsets: Optional[Sequence[Iterable[Edge]]] = None, tooltips: bool = True) -> str:
        """
        DOT rendering: vertices labelled by index (Newick as tooltip), edges labelled
        with their ordered pairs and coloured by bit edge subset when given.
        """
        bit_of = _bit_index(bit_subsets)
        lines = ['graph rspr {', '  node [shape=circle];']
        for i, tree in enumerate(self.vertices):
            tooltip = f', tooltip="{serialize_newick(tree)}"' if tooltips else ''
            lines.append(f'  {i} [label="{i}"{tooltip}];')
        for u, v in self.edges:
            label = '\\n'.join(str(pair) for pair in self.edge_moves[(u, v)])
            colour = ''
            if (u, v) in bit_of:
                colour = f', color="{_BIT_COLOURS[bit_of[(u, v)] % len(_BIT_COLOURS)]}"'
            lines.append(f'  {u} -- {v} [label="{label}"{colour}];')
        lines.append('}')
        return '\n'.join(lines) + '\n'


def _bit_index(bit_subsets: Optional[Sequence[Iterable[Edge]]]) -> Dict[Edge, int]:
    if not bit_subsets:
        return {}
    return {e: i for i, subset in enumerate(bit_subsets) for e in subset}


def check_collection(trees: Sequence[PhyloTree]) -> Tuple[PhyloTree, ...]:
    """
    Validate a tree collection and return it in canonical order.

    Raises:
        PhyloError: If the collection is empty.
        LeafSetMismatchError: If the trees do not share one leaf set.
        DuplicateTreeError: If a tree occurs twice.
    """
    if not trees:
        raise PhyloError('Tree collection is empty')
    leaves = trees[0].leaves
    if any(t.leaves != leaves for t in trees):
        raise LeafSetMismatchError('Trees in the collection have different leaf sets')
    ordered = tuple(sorted(trees, key=lambda t: t.canonical))
    for first, second in zip(ordered, ordered[1:]):
        if first == second:
            raise DuplicateTreeError(f"Tree {serialize_newick(first)} occurs more than once")
    return ordered


def build_rspr_graph(trees: Sequence[PhyloTree], progress: bool = False) -> RsprGraph:
    """
    Test every pair of trees for rSPR distance one and collect their move sets.

    Raises:
        LeafSetMismatchError: If the trees do not share one leaf set.
        DuplicateTreeError: If a tree occurs twice.
    """
    vertices = check_collection(list(trees))
    edge_moves: Dict[Edge, Tuple[OrderedPair, ...]] = {}
    pairs = list(combinations(range(len(vertices)), 2))
    for u, v in tqdm(pairs, disable=not progress, desc='rSPR pairs'):
        moves = distance_one_moves(vertices[u], vertices[v])
        if moves:
            edge_moves[(u, v)] = tuple(moves)

    logger.debug(f"rSPR graph: {len(vertices)} vertices, {len(edge_moves)} edges from {len(pairs)} pairs")
    return RsprGraph(vertices, edge_moves, pairs_tested=len(pairs))


def is_connected(g: RsprGraph) -> bool:
    """Whether the rSPR graph is connected (a single vertex counts as connected)."""
    if g.order == 0:
        return False
    return nx.is_connected(g.graph)
