# File: tests/unit/test_network.py
# -*- coding: utf-8 -*-

"""
Unit tests for networks: validation, class predicates and structural operations.
"""

import networkx as nx
import pytest

from src.phylo import (
    PhyloNetwork,
    essential_network, network_isomorphic, network_to_dot, parse_enewick, parse_newick,
    reticulation_source_pairs, source_vertex, trivial_reticulations, validate
)
from src.phylo.exceptions import DuplicateTaxonError, InvalidNetworkError, NotLevel1Error
from src.phylo.network import graft_tree_into, subdivide_in_arc, tree_to_digraph

TRIANGLE = '((a,(b)#H1),#H1);'
SQUARE = '((a,(b)#H1),(#H1,c));'
TREE_CHILD_NOT_LEVEL1 = '(((a)#H1,((b)#H2,c)),(#H1,(#H2,d)));'
NOT_TREE_CHILD = '(((a)#H1,(b)#H2),(#H1,(#H2,c)));'


def _graph(arcs, labels):
    graph = nx.DiGraph()
    graph.add_edges_from(arcs)
    for v, label in labels.items():
        graph.nodes[v]['label'] = label
    return graph


class TestPhyloNetwork:
    """Tests for network construction and structure."""

    def test_from_tree(self):
        """A tree is a network without reticulations."""
        network = PhyloNetwork.from_tree(parse_newick('((a,b),c);'))
        assert network.is_tree
        assert network.leaves == frozenset('abc')
        assert network.cluster(network.root) == frozenset('abc')

    def test_two_roots(self):
        """Exactly one vertex may lack parents."""
        graph = _graph([(0, 2), (1, 2), (2, 3)], {3: 'a'})
        with pytest.raises(InvalidNetworkError):
            PhyloNetwork(graph)

    def test_bad_degrees(self):
        """A vertex with in-degree 2 and out-degree 2 is not allowed."""
        graph = _graph(
            [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (1, 6), (2, 7)],
            {4: 'a', 5: 'b', 6: 'c', 7: 'd'}
        )
        with pytest.raises(InvalidNetworkError):
            PhyloNetwork(graph)

    def test_unlabelled_leaf(self):
        """Every leaf carries a taxon."""
        graph = _graph([(0, 1), (0, 2)], {1: 'a'})
        with pytest.raises(InvalidNetworkError):
            PhyloNetwork(graph)

    def test_duplicate_leaf_label(self):
        """Taxa are unique."""
        graph = _graph([(0, 1), (0, 2)], {1: 'a', 2: 'a'})
        with pytest.raises(DuplicateTaxonError):
            PhyloNetwork(graph)

    def test_to_tree_with_reticulation(self, n4_network):
        """Only reticulation-free networks convert to trees."""
        with pytest.raises(InvalidNetworkError):
            n4_network.to_tree()

    def test_reticulations_in_topological_order(self, n4_network):
        """The upper reticulation comes first."""
        upper, lower = n4_network.reticulations
        assert n4_network.cluster(upper) == frozenset('1234')
        assert n4_network.cluster(lower) == frozenset('1')

    def test_isomorphism(self):
        """Isomorphic networks share a canonical key; others do not."""
        first = parse_enewick(SQUARE)
        second = parse_enewick('((c,#H3),((b)#H3,a));')
        other = parse_enewick('((b,(a)#H1),(#H1,c));')
        assert first.canonical_key == second.canonical_key
        assert network_isomorphic(first, second)
        assert not network_isomorphic(first, other)

    def test_to_dot(self, n4_network):
        """Reticulations render as boxes and leaves by label."""
        dot = network_to_dot(n4_network)
        assert dot.startswith('digraph network {')
        assert dot.count('shape=box') == 2
        assert 'label="6"' in dot
        assert dot.count('->') == len(n4_network.arcs)


class TestClassification:
    """Tests for the tree-child, normal and level-1 predicates."""

    def test_example_network(self, n4_network):
        """The example network belongs to all three classes."""
        classification = validate(n4_network)
        assert classification.is_tree_child
        assert classification.is_normal
        assert classification.is_level1
        assert classification.reticulation_count == 2
        assert classification.to_dict()['shortcuts'] == []

    def test_triangle_has_shortcut(self):
        """A reticulation whose parents are adjacent is reached through a shortcut."""
        classification = validate(parse_enewick(TRIANGLE))
        assert classification.is_tree_child
        assert not classification.is_normal
        assert classification.is_level1
        assert len(classification.shortcuts) == 1

    def test_tree_child_but_not_level1(self):
        """Two reticulations sharing a biconnected component."""
        classification = validate(parse_enewick(TREE_CHILD_NOT_LEVEL1))
        assert classification.is_tree_child
        assert not classification.is_level1

    def test_not_tree_child(self):
        """A vertex whose children are both reticulations."""
        classification = validate(parse_enewick(NOT_TREE_CHILD))
        assert not classification.is_tree_child
        assert not classification.is_normal

    def test_tree_is_in_every_class(self):
        """A tree is trivially tree-child, normal and level-1."""
        classification = validate(parse_enewick('((a,b),c);'))
        assert classification.is_tree_child and classification.is_normal and classification.is_level1


class TestLevel1Structure:
    """Tests for cycles, sources and trivial reticulations of level-1 networks."""

    def test_source_vertex(self, n4_network):
        """The source of each cycle is the vertex without an in-arc on it."""
        upper, lower = n4_network.reticulations
        assert n4_network.cluster(source_vertex(n4_network, upper)) == frozenset('123456')
        assert n4_network.cluster(source_vertex(n4_network, lower)) == frozenset('1234')

    def test_reticulation_source_pairs(self, n4_network):
        """(C(v), C(u)) per reticulation."""
        assert set(reticulation_source_pairs(n4_network)) == {
            (frozenset('1234'), frozenset('123456')),
            (frozenset('1'), frozenset('1234')),
        }

    def test_source_vertex_errors(self, n4_network):
        """Only reticulations of level-1 networks have sources."""
        with pytest.raises(InvalidNetworkError):
            source_vertex(n4_network, n4_network.root)
        network = parse_enewick(TREE_CHILD_NOT_LEVEL1)
        with pytest.raises(NotLevel1Error):
            source_vertex(network, network.reticulations[0])

    def test_trivial_reticulations(self, n4_network):
        """Only three-vertex cycles are trivial."""
        assert trivial_reticulations(n4_network) == []
        assert len(trivial_reticulations(parse_enewick(TRIANGLE))) == 1

    def test_essential_network(self, n4_network):
        """Removing the trivial reticulation leaves the displayed tree."""
        assert network_isomorphic(essential_network(parse_enewick(TRIANGLE)), parse_enewick('(a,b);'))
        assert essential_network(n4_network) is n4_network

    def test_essential_network_not_level1(self):
        """The operation is defined for level-1 networks only."""
        with pytest.raises(NotLevel1Error):
            essential_network(parse_enewick(TREE_CHILD_NOT_LEVEL1))


class TestGraphSurgery:
    """Tests for the mutable graph helpers used during reconstruction."""

    def test_subdivide_in_arc(self):
        """A new vertex lands on the arc into v."""
        graph = tree_to_digraph(parse_newick('((a,b),c);'))
        leaf = next(v for v, d in graph.nodes(data=True) if d.get('label') == 'a')
        w = subdivide_in_arc(graph, leaf)
        assert list(graph.successors(w)) == [leaf]
        assert graph.in_degree(w) == 1

    def test_subdivide_above_root(self):
        """Subdividing above the root creates a new root."""
        graph = tree_to_digraph(parse_newick('(a,b);'))
        w = subdivide_in_arc(graph, 0)
        assert graph.in_degree(w) == 0
        assert list(graph.successors(w)) == [0]

    def test_subdivide_above_reticulation(self, n4_network):
        """A reticulation has two in-arcs, so there is no single arc to split."""
        graph = nx.DiGraph(n4_network.graph)
        with pytest.raises(InvalidNetworkError):
            subdivide_in_arc(graph, n4_network.reticulations[0])

    def test_graft_tree_into(self):
        """A leaf is replaced by a whole tree and its clusters are mapped."""
        graph = tree_to_digraph(parse_newick('(x,c);'))
        placed = graft_tree_into(graph, 'x', parse_newick('(a,b);'))
        network = PhyloNetwork(graph)
        assert network.to_tree() == parse_newick('((a,b),c);')
        assert network.cluster(placed[frozenset('ab')]) == frozenset('ab')

    def test_graft_tree_into_unknown_leaf(self):
        """The leaf must exist."""
        graph = tree_to_digraph(parse_newick('(x,c);'))
        with pytest.raises(InvalidNetworkError):
            graft_tree_into(graph, 'y', parse_newick('(a,b);'))
