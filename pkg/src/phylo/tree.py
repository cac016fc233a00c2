# File: src/phylo/tree.py

# -*- coding: utf-8 -*-

"""
Rooted binary phylogenetic trees.

A PhyloTree is an immutable value: vertices are integer ids, internal vertices
have exactly two children and every leaf carries a distinct taxon label.
Equality and hashing follow the canonical Newick form, so two trees compare
equal exactly when they are isomorphic with labels preserved.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set, Tuple, Union

from src.phylo.exceptions import (
    ClusterError,
    DuplicateTaxonError,
    InvalidTreeError,
    LeafSetMismatchError,
)

Taxon = str
Cluster = FrozenSet[Taxon]
# A tree written as nested pairs: a leaf is its label, a cherry is a 2-tuple.
Nested = Union[Taxon, Tuple['Nested', 'Nested']]


def cluster_key(cluster: Iterable[Taxon]) -> Tuple[int, Tuple[Taxon, ...]]:
    """Sort key ordering clusters by size, then by their sorted members."""
    members = tuple(sorted(cluster))
    return len(members), members


def format_cluster(cluster: Iterable[Taxon]) -> str:
    """Render a cluster as ``{a,b,c}`` with sorted members."""
    return '{' + ','.join(sorted(cluster)) + '}'


@dataclass(frozen=True)
class RootedTriple:
    """The rooted triple ``ab|c``: a and b are closer to each other than to c."""

    pair: FrozenSet[Taxon]
    outgroup: Taxon

    def __post_init__(self):
        if len(self.pair) != 2 or self.outgroup in self.pair:
            raise ValueError(f"A rooted triple needs three distinct taxa, got {sorted(self.pair)}|{self.outgroup}")

    def __str__(self) -> str:
        a, b = sorted(self.pair)
        return f"{a},{b}|{self.outgroup}"


class PhyloTree:
    """Rooted binary phylogenetic tree on a set of taxa."""

    def __init__(self, children: Sequence[Sequence[int]], labels: Mapping[int, Taxon], root: int):
        """
        Build and validate a tree.

        Args:
            children: For each vertex id (its index), the ids of its children.
            labels: Taxon label of every leaf.
            root: Id of the root vertex.

        Raises:
            InvalidTreeError: If the structure is not a rooted binary tree.
            DuplicateTaxonError: If two leaves share a label.
        """
        self._children: Tuple[Tuple[int, ...], ...] = tuple(tuple(c) for c in children)
        self._labels: Dict[int, Taxon] = dict(labels)
        self._root = root
        self._parents = self._validate()

    def _validate(self) -> Tuple[Optional[int], ...]:
        n = len(self._children)
        if n == 0:
            raise InvalidTreeError('A tree needs at least one vertex')
        if not 0 <= self._root < n:
            raise InvalidTreeError(f"Root {self._root} is not a vertex")

        parents: List[Optional[int]] = [None] * n
        for v, kids in enumerate(self._children):
            if len(kids) not in (0, 2):
                raise InvalidTreeError(f"Vertex {v} has {len(kids)} children; internal vertices need exactly two")
            for c in kids:
                if not 0 <= c < n:
                    raise InvalidTreeError(f"Vertex {v} has unknown child {c}")
                if c == self._root or parents[c] is not None:
                    raise InvalidTreeError(f"Vertex {c} has more than one parent")
                parents[c] = v

        seen_labels: Set[Taxon] = set()
        for v, kids in enumerate(self._children):
            label = self._labels.get(v)
            if kids and label is not None:
                raise InvalidTreeError(f"Internal vertex {v} carries label {label!r}")
            if not kids:
                if not label:
                    raise InvalidTreeError(f"Leaf {v} has no label")
                if label in seen_labels:
                    raise DuplicateTaxonError(f"Duplicate taxon label {label!r}")
                seen_labels.add(label)

        reached = sum(1 for _ in self._preorder())
        if reached != n:
            raise InvalidTreeError('Some vertices are not reachable from the root')
        return tuple(parents)

    @classmethod
    def from_nested(cls, nested: Nested) -> 'PhyloTree':
        """Build a tree from nested pairs such as ``(('a', 'b'), 'c')``."""
        children: List[Tuple[int, ...]] = []
        labels: Dict[int, Taxon] = {}

        def build(node: Nested) -> int:
            v = len(children)
            children.append(())
            if isinstance(node, str):
                labels[v] = node
                return v
            if len(node) != 2:
                raise InvalidTreeError(f"Nested node with {len(node)} children")
            left = build(node[0])
            right = build(node[1])
            children[v] = (left, right)
            return v

        build(nested)
        return cls(children, labels, 0)

    # Structure

    @property
    def root(self) -> int:
        return self._root

    @property
    def size(self) -> int:
        """Number of vertices (2|X| - 1)."""
        return len(self._children)

    def children(self, v: int) -> Tuple[int, ...]:
        return self._children[v]

    def parent(self, v: int) -> Optional[int]:
        return self._parents[v]

    def is_leaf(self, v: int) -> bool:
        return not self._children[v]

    def label(self, v: int) -> Optional[Taxon]:
        return self._labels.get(v)

    def _preorder(self) -> Iterable[int]:
        stack = [self._root]
        while stack:
            v = stack.pop()
            yield v
            stack.extend(reversed(self._children[v]))

    def postorder(self) -> List[int]:
        """Vertices with every child before its parent."""
        return list(reversed(list(self._preorder())))

    @cached_property
    def leaves(self) -> FrozenSet[Taxon]:
        return frozenset(self._labels.values())

    @cached_property
    def leaf_vertex(self) -> Dict[Taxon, int]:
        return {label: v for v, label in self._labels.items()}

    @cached_property
    def clusters(self) -> Tuple[Cluster, ...]:
        """Cluster of every vertex, indexed by vertex id."""
        result: List[Cluster] = [frozenset()] * self.size
        for v in self.postorder():
            kids = self._children[v]
            if kids:
                result[v] = result[kids[0]] | result[kids[1]]
            else:
                result[v] = frozenset((self._labels[v],))
        return tuple(result)

    @cached_property
    def cluster_set(self) -> FrozenSet[Cluster]:
        return frozenset(self.clusters)

    @cached_property
    def vertex_of(self) -> Dict[Cluster, int]:
        """Vertex whose cluster is the given taxon set."""
        return {cluster: v for v, cluster in enumerate(self.clusters)}

    @cached_property
    def _canonical_parts(self) -> Tuple[Tuple[Taxon, str], ...]:
        parts: List[Tuple[Taxon, str]] = [('', '')] * self.size
        for v in self.postorder():
            kids = self._children[v]
            if not kids:
                label = self._labels[v]
                parts[v] = (label, label)
            else:
                first, second = sorted((parts[kids[0]], parts[kids[1]]))
                parts[v] = (first[0], f"({first[1]},{second[1]})")
        return tuple(parts)

    @property
    def canonical(self) -> str:
        """Canonical Newick body (without the terminating ';')."""
        return self._canonical_parts[self._root][1]

    def min_label(self, v: int) -> Taxon:
        """Lexicographically least taxon below v."""
        return self._canonical_parts[v][0]

    def to_nested(self, v: Optional[int] = None) -> Nested:
        """The subtree at v (default: the root) as canonically ordered nested pairs."""
        v = self._root if v is None else v
        kids = self._children[v]
        if not kids:
            return self._labels[v]
        first, second = sorted(kids, key=self.min_label)
        return self.to_nested(first), self.to_nested(second)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhyloTree):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash(self.canonical)

    def __repr__(self) -> str:
        return f"PhyloTree('{self.canonical};')"


def _require_taxa(t: PhyloTree, taxa: Iterable[Taxon]) -> Cluster:
    taxa = frozenset(taxa)
    if not taxa:
        raise ClusterError('Taxon set must not be empty')
    unknown = taxa - t.leaves
    if unknown:
        raise ClusterError(f"Unknown taxa: {format_cluster(unknown)}")
    return taxa


def clusters_of(t: PhyloTree) -> Set[Cluster]:
    """The set of clusters of t, one per vertex."""
    return set(t.cluster_set)


def _restrict_nested(node: Nested, keep: Cluster) -> Optional[Nested]:
    if isinstance(node, str):
        return node if node in keep else None
    left = _restrict_nested(node[0], keep)
    right = _restrict_nested(node[1], keep)
    if left is None:
        return right
    if right is None:
        return left
    return left, right


def restrict(t: PhyloTree, taxa: Iterable[Taxon]) -> PhyloTree:
    """
    Restrict t to a subset of its taxa, suppressing the resulting degree-two vertices.

    Raises:
        ClusterError: If the set is empty or holds unknown taxa.
    """
    keep = _require_taxa(t, taxa)
    if keep == t.leaves:
        return t
    return PhyloTree.from_nested(_restrict_nested(t.to_nested(), keep))


def tree_isomorphic(t1: PhyloTree, t2: PhyloTree) -> bool:
    """
    Whether a leaf-label preserving isomorphism maps t1 onto t2.

    Raises:
        LeafSetMismatchError: If the trees have different leaf sets.
    """
    if t1.leaves != t2.leaves:
        raise LeafSetMismatchError('Trees have different leaf sets')
    return t1.canonical == t2.canonical


def _replace_subtree(t: PhyloTree, target: int, replacement: Nested) -> Nested:
    def rebuild(v: int) -> Nested:
        if v == target:
            return replacement
        kids = t.children(v)
        if not kids:
            return t.label(v)
        return rebuild(kids[0]), rebuild(kids[1])

    return rebuild(t.root)


def subtree_reduce(t: PhyloTree, cluster: Iterable[Taxon], replacement: Taxon) -> PhyloTree:
    """
    Replace the pendant subtree on a cluster by a single new leaf.

    Raises:
        ClusterError: If the taxa do not form a cluster of t.
        DuplicateTaxonError: If the replacement label is already a taxon of t.
    """
    cluster = _require_taxa(t, cluster)
    vertex = t.vertex_of.get(cluster)
    if vertex is None:
        raise ClusterError(f"{format_cluster(cluster)} is not a cluster of the tree")
    if replacement in t.leaves:
        raise DuplicateTaxonError(f"Replacement leaf {replacement!r} is already a taxon")
    return PhyloTree.from_nested(_replace_subtree(t, vertex, replacement))


def graft(t: PhyloTree, leaf: Taxon, subtree: PhyloTree) -> PhyloTree:
    """
    Replace a leaf of t by a whole subtree; the inverse of a subtree reduction.

    Raises:
        ClusterError: If the leaf is not a taxon of t.
        DuplicateTaxonError: If the subtree shares taxa with the rest of t.
    """
    if leaf not in t.leaves:
        raise ClusterError(f"{leaf!r} is not a taxon of the tree")
    clash = subtree.leaves & (t.leaves - {leaf})
    if clash:
        raise DuplicateTaxonError(f"Grafted subtree repeats taxa {format_cluster(clash)}")
    return PhyloTree.from_nested(_replace_subtree(t, t.leaf_vertex[leaf], subtree.to_nested()))


def rooted_triples(t: PhyloTree) -> Set[RootedTriple]:
    """
    All rooted triples displayed by t, one per 3-subset of its taxa.

    Raises:
        ClusterError: If t has fewer than three taxa.
    """
    if len(t.leaves) < 3:
        raise ClusterError('Rooted triples need at least three taxa')
    triples: Set[RootedTriple] = set()
    for v in range(t.size):
        kids = t.children(v)
        if not kids:
            continue
        for inner, outer in ((kids[0], kids[1]), (kids[1], kids[0])):
            for a, b in combinations(sorted(t.clusters[inner]), 2):
                for c in t.clusters[outer]:
                    triples.add(RootedTriple(frozenset((a, b)), c))
    return triples


def regraft_positions(node: Nested, subtree: Nested) -> Iterable[Nested]:
    """Every tree obtained by attaching subtree on an arc of node (root arc included)."""
    yield node, subtree
    if not isinstance(node, str):
        left, right = node
        for attached in regraft_positions(left, subtree):
            yield attached, right
        for attached in regraft_positions(right, subtree):
            yield left, attached


def prune_positions(node: Nested) -> Iterable[Tuple[Nested, Nested]]:
    """Every (remaining tree, pruned subtree) split obtained by cutting one non-root arc."""
    if isinstance(node, str):
        return
    left, right = node
    yield right, left
    yield left, right
    for remaining, pruned in prune_positions(left):
        yield (remaining, right), pruned
    for remaining, pruned in prune_positions(right):
        yield (left, remaining), pruned
