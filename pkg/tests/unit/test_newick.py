# File: tests/unit/test_newick.py
# -*- coding: utf-8 -*-

"""
Unit tests for Newick and eNewick parsing and serialization.
"""

import pytest

from src.phylo import network_isomorphic, parse_enewick, parse_newick, serialize_enewick, serialize_newick
from src.phylo.exceptions import (
    DuplicateTaxonError,
    InvalidNetworkError,
    NewickParseError,
    NonBinaryVertexError,
)


class TestNewick:
    """Tests for rooted binary Newick trees."""

    def test_parse_and_canonical_form(self):
        """Children are ordered by their least taxon in the canonical string."""
        t = parse_newick('(c,(b,a));')
        assert t.leaves == frozenset('abc')
        assert serialize_newick(t) == '((a,b),c);'

    def test_equal_trees_in_different_orders(self):
        """Sibling order does not change the parsed tree."""
        assert parse_newick('((1,2),(3,4));') == parse_newick('((4,3),(2,1));')

    def test_whitespace_is_ignored(self):
        """Blanks between tokens are skipped."""
        assert parse_newick(' ( a , b ) ; ') == parse_newick('(a,b);')

    def test_single_leaf(self):
        """A lone taxon is a valid tree."""
        t = parse_newick('x;')
        assert t.leaves == frozenset({'x'})
        assert serialize_newick(t) == 'x;'

    def test_missing_semicolon(self):
        """The terminating semicolon is required."""
        with pytest.raises(NewickParseError):
            parse_newick('(a,b)')

    def test_error_reports_position(self):
        """Syntax errors carry the offending position."""
        with pytest.raises(NewickParseError) as exc_info:
            parse_newick('(a,b)$;')
        assert exc_info.value.position == 5
        assert 'position 5' in str(exc_info.value)

    def test_trailing_garbage(self):
        """Nothing may follow the semicolon."""
        with pytest.raises(NewickParseError):
            parse_newick('(a,b);(c,d);')

    def test_empty_input(self):
        """An empty string is a parse error."""
        with pytest.raises(NewickParseError):
            parse_newick('')

    def test_non_binary_vertex(self):
        """Multifurcations are rejected."""
        with pytest.raises(NonBinaryVertexError):
            parse_newick('(a,b,c);')
        with pytest.raises(NonBinaryVertexError):
            parse_newick('((a),b);')

    def test_duplicate_taxon(self):
        """A label may occur only once."""
        with pytest.raises(DuplicateTaxonError):
            parse_newick('((a,b),a);')

    def test_hybrid_tag_in_tree(self):
        """Trees cannot carry hybrid tags."""
        with pytest.raises(NewickParseError):
            parse_newick('((a)#H1,(#H1,b));')


class TestENewick:
    """Tests for extended Newick networks."""

    def test_parse_network(self, n4_network):
        """The example network has six leaves and two reticulations."""
        assert n4_network.leaves == frozenset('123456')
        assert n4_network.reticulation_count == 2

    def test_parse_tree_as_network(self):
        """A plain Newick string is a network without reticulations."""
        network = parse_enewick('((a,b),c);')
        assert network.is_tree
        assert network.to_tree() == parse_newick('((a,b),c);')

    def test_serialize_is_deterministic(self):
        """Isomorphic inputs written differently serialize identically."""
        first = parse_enewick('((a,(b)#H1),(#H1,c));')
        second = parse_enewick('((c,#H7),((b)#H7,a));')
        assert serialize_enewick(first) == serialize_enewick(second)
        assert network_isomorphic(first, second)

    def test_serialized_string_parses_back(self, n4_network):
        """Parsing the serialized string gives an isomorphic network."""
        again = parse_enewick(serialize_enewick(n4_network))
        assert network_isomorphic(again, n4_network)

    def test_hybrid_ids_follow_first_visit(self, n4_network):
        """Hybrid ids are numbered from 1 in the order they are reached."""
        text = serialize_enewick(n4_network)
        assert '#H1' in text and '#H2' in text
        assert text.index('#H1') < text.index('#H2')

    def test_unmatched_hybrid_tag(self):
        """A hybrid tag must occur with a subtree and as a bare reference."""
        with pytest.raises(NewickParseError):
            parse_enewick('((a)#H1,(b,c));')
        with pytest.raises(NewickParseError):
            parse_enewick('((a,#H1),(b,c));')

    def test_hybrid_tag_used_three_times(self):
        """A reticulation has exactly two parents."""
        with pytest.raises(NewickParseError):
            parse_enewick('(((a)#H1,#H1),(#H1,b));')

    def test_hybrid_tag_on_leaf(self):
        """Tags follow a single-child group, never a bare label."""
        with pytest.raises(NewickParseError):
            parse_enewick('((a#H1,b),(#H1,c));')

    def test_parallel_arcs(self):
        """Both references from one vertex would create parallel arcs."""
        with pytest.raises(InvalidNetworkError):
            parse_enewick('(((a)#H1,#H1),b);')

    def test_cycle_is_rejected(self):
        """A reticulation below its own reference forms a directed cycle."""
        with pytest.raises(InvalidNetworkError):
            parse_enewick('(((a,#H1))#H1,b);')
