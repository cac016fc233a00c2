# File: src/phylo/newick.py

# -*- coding: utf-8 -*-

"""
Newick and extended Newick (eNewick) reading and writing.

Grammar (whitespace between tokens is ignored):

    tree    := node ';'
    node    := leaf | '(' node ',' node ')'
    network := node ';'  where a node may also be
               '(' node ')' '#H<digits>'   (reticulation with its child)
               '#H<digits>'                (second in-arc of that reticulation)

Labels use the alphabet [A-Za-z0-9_.-]. Branch lengths, internal labels and
'::' attributes are not accepted.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx

from src.phylo.exceptions import (
    InvalidNetworkError,
    NewickParseError,
    NonBinaryVertexError,
)
from src.phylo.tree import Nested, PhyloTree

_TOKEN_RE = re.compile(r'\s*(?:(?P<punct>[(),;])|(?P<hybrid>#H\d+)|(?P<label>[A-Za-z0-9_.\-]+))')
_TRAILING_RE = re.compile(r'\s*')


@dataclass
class _Token:
    kind: str  # one of ( ) , ; label hybrid
    text: str
    position: int


@dataclass
class _Node:
    position: int
    label: Optional[str] = None
    children: List['_Node'] = field(default_factory=list)
    hybrid: Optional[str] = None
    is_reference: bool = False


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    pos = 0
    while True:
        trailing = _TRAILING_RE.match(text, pos)
        if trailing.end() == len(text):
            return tokens
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            bad = trailing.end()
            raise NewickParseError(f"Unexpected character {text[bad]!r}", bad)
        kind = match.lastgroup
        value = match.group(kind)
        start = match.start(kind)
        tokens.append(_Token(value if kind == 'punct' else kind, value, start))
        pos = match.end()


class _Parser:
    """Recursive descent over the token stream."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def _peek(self) -> Optional[_Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _next(self, expected: str) -> _Token:
        token = self._peek()
        if token is None:
            raise NewickParseError(f"Unexpected end of input, expected {expected}", len(self.text))
        self.index += 1
        return token

    def parse(self) -> _Node:
        if not self.tokens:
            raise NewickParseError('Empty input', 0)
        node = self._node()
        token = self._next("';'")
        if token.kind != ';':
            raise NewickParseError(f"Expected ';' but found {token.text!r}", token.position)
        extra = self._peek()
        if extra is not None:
            raise NewickParseError(f"Unexpected {extra.text!r} after ';'", extra.position)
        return node

    def _node(self) -> _Node:
        token = self._next('a subtree')
        if token.kind == '(':
            node = _Node(position=token.position, children=[self._node()])
            while True:
                token = self._next("',' or ')'")
                if token.kind == ',':
                    node.children.append(self._node())
                elif token.kind == ')':
                    break
                else:
                    raise NewickParseError(f"Expected ',' or ')' but found {token.text!r}", token.position)
        elif token.kind == 'label':
            node = _Node(position=token.position, label=token.text)
        elif token.kind == 'hybrid':
            return _Node(position=token.position, hybrid=token.text[1:], is_reference=True)
        else:
            raise NewickParseError(f"Unexpected {token.text!r}", token.position)

        following = self._peek()
        if following is not None and following.kind == 'hybrid':
            self.index += 1
            node.hybrid = following.text[1:]
        return node


def parse_newick(text: str) -> PhyloTree:
    """
    Parse a rooted binary Newick string.

    Raises:
        NewickParseError: On a syntax error, with the offending position.
        NonBinaryVertexError: If a group does not have exactly two children.
        DuplicateTaxonError: If a label repeats.
    """
    root = _Parser(text).parse()

    def convert(node: _Node) -> Nested:
        if node.hybrid is not None:
            raise NewickParseError('Hybrid tags are not allowed in a tree', node.position)
        if node.label is not None:
            return node.label
        if len(node.children) != 2:
            raise NonBinaryVertexError(f"Non-binary vertex with {len(node.children)} children", node.position)
        return convert(node.children[0]), convert(node.children[1])

    return PhyloTree.from_nested(convert(root))


def serialize_newick(t: PhyloTree) -> str:
    """Canonical Newick string: children ordered by their least taxon label."""
    return f"{t.canonical};"


def parse_enewick(text: str) -> 'PhyloNetwork':
    """
    Parse an extended Newick string into a network.

    Raises:
        NewickParseError: On syntax errors or hybrid tags that do not occur
            exactly twice (once with a subtree, once bare).
        NonBinaryVertexError: If a tree vertex does not have two children.
        InvalidNetworkError: If the resolved graph is not a valid network.
    """
    from src.phylo.network import PhyloNetwork

    root = _Parser(text).parse()
    graph = nx.DiGraph()
    definitions: Dict[str, int] = {}
    references: Dict[str, List[Tuple[int, int]]] = {}
    arcs: List[Tuple[int, int]] = []

    def build(node: _Node) -> int:
        v = graph.number_of_nodes()
        if node.label is not None:
            if node.hybrid is not None:
                raise NewickParseError('A hybrid tag must follow a single-child group, not a leaf', node.position)
            graph.add_node(v, label=node.label)
            return v
        graph.add_node(v)
        if node.hybrid is not None:
            if node.hybrid in definitions:
                raise NewickParseError(f"Hybrid tag #{node.hybrid} has two subtrees", node.position)
            if len(node.children) != 1:
                raise NewickParseError(f"Reticulation #{node.hybrid} must have exactly one child", node.position)
            definitions[node.hybrid] = v
        elif len(node.children) != 2:
            raise NonBinaryVertexError(f"Non-binary vertex with {len(node.children)} children", node.position)
        for child in node.children:
            if child.is_reference:
                references.setdefault(child.hybrid, []).append((v, child.position))
            else:
                arcs.append((v, build(child)))
        return v

    if root.is_reference:
        raise NewickParseError('The root cannot be a bare hybrid reference', root.position)
    build(root)

    for tag, v in definitions.items():
        uses = references.get(tag, [])
        if len(uses) != 1:
            raise NewickParseError(f"Hybrid tag #{tag} must occur exactly twice, found {len(uses) + 1} occurrences")
        arcs.append((uses[0][0], v))
    for tag, uses in references.items():
        if tag not in definitions:
            raise NewickParseError(f"Hybrid tag #{tag} has no subtree", uses[0][1])

    if len(set(arcs)) != len(arcs):
        raise InvalidNetworkError('Network has parallel arcs')
    for u, v in arcs:
        if u == v:
            raise InvalidNetworkError(f"Network has a loop at vertex {u}")
    graph.add_edges_from(arcs)
    return PhyloNetwork(graph)


def serialize_enewick(network: 'PhyloNetwork') -> str:
    """
    Deterministic eNewick string of a network.

    Children are ordered by (least taxon below, structural code); hybrid ids are
    assigned in the order reticulations are first reached from the root.
    """
    hybrid_ids: Dict[int, int] = {}

    def emit(v: int) -> str:
        if network.is_leaf(v):
            return network.label(v)
        if network.is_reticulation(v):
            if v in hybrid_ids:
                return f"#H{hybrid_ids[v]}"
            hybrid_ids[v] = len(hybrid_ids) + 1
            (child,) = network.children(v)
            return f"({emit(child)})#H{hybrid_ids[v]}"
        ordered = sorted(network.children(v), key=network.order_key)
        return '(' + ','.join(emit(c) for c in ordered) + ')'

    return f"{emit(network.root)};"
