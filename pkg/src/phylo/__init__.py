# File: src/phylo/__init__.py

# -*- coding: utf-8 -*-

"""
Phylogenetic trees and networks: value types, Newick/eNewick I/O, class
predicates and structural operations.
"""

from .tree import (
    Cluster, PhyloTree, RootedTriple, Taxon,
    clusters_of, cluster_key, format_cluster, graft, restrict, rooted_triples,
    subtree_reduce, tree_isomorphic
)
from .network import (
    NetworkClassification, PhyloNetwork,
    essential_network, network_isomorphic, network_to_dot, reticulation_source_pairs,
    source_vertex, trivial_reticulations, validate
)
from .newick import parse_enewick, parse_newick, serialize_enewick, serialize_newick

__all__ = [
    'Cluster',
    'PhyloTree',
    'RootedTriple',
    'Taxon',
    'clusters_of',
    'cluster_key',
    'format_cluster',
    'graft',
    'restrict',
    'rooted_triples',
    'subtree_reduce',
    'tree_isomorphic',
    'NetworkClassification',
    'PhyloNetwork',
    'essential_network',
    'network_isomorphic',
    'network_to_dot',
    'reticulation_source_pairs',
    'source_vertex',
    'trivial_reticulations',
    'validate',
    'parse_enewick',
    'parse_newick',
    'serialize_enewick',
    'serialize_newick',
]
