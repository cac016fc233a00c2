# File: tests/unit/test_construct.py
# -*- coding: utf-8 -*-

"""
Unit tests for the level-1 decision gates, network rebuilding and enumeration.
"""

import pytest
from unittest.mock import patch

from src.display import display_set
from src.hypercube import hypercube_iso
from src.level1 import (
    FailureReason, TIE_BREAK_KEYS, analyse, build_network, construct_level1, enumerate_level1, reconstruct,
    verify_reconstruction
)
from src.phylo import (
    PhyloNetwork, network_isomorphic, parse_enewick, parse_newick, reticulation_source_pairs,
    serialize_enewick, trivial_reticulations, validate
)
from src.phylo.exceptions import CapExceededError, DuplicateTreeError, InvariantViolation, LeafSetMismatchError
from src.rspr import OrderedPair, RsprGraph, build_rspr_graph

X = frozenset('123456')


def pair(moving, enclosing):
    return OrderedPair(frozenset(moving), frozenset(enclosing))


class TestAnalyse:
    """Tests for the three decision gates."""

    def test_example_passes(self, f4_list):
        """The four example trees pass every gate."""
        result = analyse(f4_list)
        assert result.decision
        assert result.reason is None
        assert result.k == 2
        assert result.network is None
        assert result.chosen_pairs == (pair('1234', X), pair('1', '1234'))

    def test_not_power_of_two(self, f4_list):
        """Three trees cannot be a maximum display set."""
        result = analyse(f4_list[:3])
        assert not result.decision
        assert result.reason is FailureReason.NOT_POWER_OF_TWO
        assert result.graph is None

    def test_not_hypercube(self, f4_trees):
        """Two trees two moves apart do not form Q_1."""
        result = analyse([f4_trees['T1'], f4_trees['T4']])
        assert not result.decision
        assert result.reason is FailureReason.NOT_HYPERCUBE
        assert result.k == 1
        assert result.graph.edges == []

    def test_no_nested_labelling(self, f4_list):
        """A square whose two edge classes carry clashing pairs fails the last gate."""
        vertices = build_rspr_graph(f4_list).vertices
        outer, fifth = (pair('1234', X),), (pair('5', X),)
        synthetic = RsprGraph(vertices, {(0, 1): outer, (2, 3): outer, (0, 2): fifth, (1, 3): fifth})
        with patch('src.level1.construct.build_rspr_graph', return_value=synthetic):
            result = analyse(f4_list)
        assert not result.decision
        assert result.reason is FailureReason.NO_NESTED_LABELLING
        assert result.hypercube is not None
        assert result.labelling is None

    def test_single_tree(self, f4_trees):
        """One tree is the display set of itself."""
        result = analyse([f4_trees['T1']])
        assert result.decision
        assert result.k == 0

    def test_tree_cap(self, f4_list):
        """More than 2^max_tree_exponent trees is refused."""
        with pytest.raises(CapExceededError):
            analyse(f4_list, max_tree_exponent=1)

    def test_invalid_collections(self, f4_trees):
        """Duplicates and mixed leaf sets are input errors."""
        with pytest.raises(DuplicateTreeError):
            analyse([f4_trees['T1'], f4_trees['T1']])
        with pytest.raises(LeafSetMismatchError):
            analyse([f4_trees['T1'], parse_newick('((1,2),3);')])


class TestReconstruct:
    """Tests for reconstruct and its wrappers."""

    def test_example_network(self, f4_list, n4_network):
        """The default labelling rebuilds the example network."""
        result = reconstruct(f4_list)
        assert result.decision
        assert network_isomorphic(result.network, n4_network)
        assert set(reticulation_source_pairs(result.network)) == {
            (frozenset('1234'), X), (frozenset('1'), frozenset('1234'))
        }
        assert set(display_set(result.network).trees) == set(f4_list)
        assert result.all_networks is None

    def test_smallest_tie_break(self, f4_list, n4_network):
        """Choosing ({5}, X) gives a different network with the same display set."""
        network = construct_level1(f4_list, key=TIE_BREAK_KEYS['smallest'])
        assert not network_isomorphic(network, n4_network)
        assert (frozenset('5'), X) in set(reticulation_source_pairs(network))
        assert verify_reconstruction(network, f4_list)

    def test_enumerate(self, f4_list, n4_network):
        """Three labelling sequences give three distinct networks."""
        result = reconstruct(f4_list, all_networks=True)
        assert result.sequence_count == 3
        assert len(result.all_networks) == 3
        assert any(network_isomorphic(n, n4_network) for n in result.all_networks)
        assert all(verify_reconstruction(n, f4_list) for n in result.all_networks)
        keys = [serialize_enewick(n) for n in result.all_networks]
        assert keys == sorted(keys)

    def test_enumerate_level1(self, f4_list):
        """The wrapper returns the deduplicated networks."""
        assert len(enumerate_level1(f4_list)) == 3
        assert enumerate_level1(f4_list[:3]) == []

    def test_one_reticulation(self, f4_trees):
        """Two neighbouring trees give a network with one non-trivial reticulation."""
        trees = [f4_trees['T1'], f4_trees['T3']]
        network = construct_level1(trees)
        assert network.reticulation_count == 1
        assert trivial_reticulations(network) == []
        assert set(display_set(network).trees) == set(trees)

    def test_rnni_pair(self, f4_trees):
        """Swapping 5 and 6 is rebuilt without a triangle."""
        trees = [f4_trees['T1'], f4_trees['T2']]
        network = construct_level1(trees)
        assert verify_reconstruction(network, trees)

    def test_single_tree(self, f4_trees):
        """A single tree comes back as a network without reticulations."""
        result = reconstruct([f4_trees['T1']], all_networks=True)
        assert result.network.is_tree
        assert result.network.to_tree() == f4_trees['T1']
        assert len(result.all_networks) == 1
        assert result.sequence_count == 1

    def test_failure(self, f4_list):
        """No network for three trees, and an empty enumeration."""
        assert construct_level1(f4_list[:3]) is None
        result = reconstruct(f4_list[:3], all_networks=True)
        assert result.all_networks == ()

    def test_to_dict(self, f4_list):
        """The JSON document of a positive run."""
        data = reconstruct(f4_list, all_networks=True).to_dict()
        assert data['decision'] == 'yes'
        assert data['reason'] is None
        assert data['k'] == 2
        assert data['bit_subsets'] == [[[0, 1], [2, 3]], [[0, 2], [1, 3]]]
        assert data['chosen_pairs'] == [[['1', '2', '3', '4'], list('123456')], [['1'], ['1', '2', '3', '4']]]
        assert data['network'].endswith(';')
        assert data['network_count'] == 3
        assert data['sequence_count'] == 3
        assert len(data['all_networks']) == 3

    def test_to_dict_failure(self, f4_list):
        """The JSON document of a negative run."""
        data = reconstruct(f4_list[:3]).to_dict()
        assert data == {
            'decision': 'no',
            'reason': 'NOT_POWER_OF_TWO',
            'k': None,
            'bit_subsets': [],
            'chosen_pairs': [],
            'network': None,
        }


class TestBuildNetwork:
    """Tests for the rebuild step on its own."""

    def test_non_laminar_enclosing_clusters(self, f4_list):
        """Overlapping enclosing clusters are an internal error."""
        g = build_rspr_graph(f4_list)
        hmap = hypercube_iso(g.graph)
        with pytest.raises(InvariantViolation):
            build_network(g, hmap, [pair('1', '12'), pair('3', '23')])

    def test_result_is_level1(self, f4_list):
        """The rebuilt network is level-1 and normal."""
        g = build_rspr_graph(f4_list)
        hmap = hypercube_iso(g.graph)
        network = build_network(g, hmap, [pair('6', X), pair('1', '1234')])
        classification = validate(network)
        assert classification.is_level1
        assert network.leaves == X


class TestVerifyReconstruction:
    """Tests for the soundness check."""

    def test_example(self, n4_network, f4_list):
        """The example network displays exactly the example trees."""
        assert verify_reconstruction(n4_network, f4_list)
        assert not verify_reconstruction(n4_network, f4_list[:3])

    def test_trivial_reticulation(self):
        """A triangle is rejected even though its display set matches."""
        network = parse_enewick('((a,(b)#H1),#H1);')
        assert not verify_reconstruction(network, [parse_newick('(a,b);')])

    def test_not_level1(self):
        """Networks outside level-1 are rejected."""
        network = parse_enewick('(((a)#H1,((b)#H2,c)),(#H1,(#H2,d)));')
        assert not verify_reconstruction(network, list(display_set(network).trees))

    def test_tree(self, f4_trees):
        """A tree verifies against itself."""
        network = PhyloNetwork.from_tree(f4_trees['T1'])
        assert verify_reconstruction(network, [f4_trees['T1']])
