# File: src/phylo/exceptions.py

# -*- coding: utf-8 -*-

"""
Exception hierarchy for l1kit.

Input and precondition failures derive from PhyloError (a ValueError) and are
reported to CLI users as input errors. InvariantViolation signals a broken
internal guarantee and is never expected on valid inputs.
"""

from typing import Optional


class PhyloError(ValueError):
    """Base class for invalid inputs and violated preconditions."""


class NewickParseError(PhyloError):
    """Syntax error in a Newick or eNewick string."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NonBinaryVertexError(NewickParseError):
    """A parenthesised group does not have exactly two children."""


class DuplicateTaxonError(PhyloError):
    """A taxon label occurs more than once."""


class InvalidTreeError(PhyloError):
    """A structure violates the rooted binary tree invariants."""


class InvalidNetworkError(PhyloError):
    """A structure violates the rooted binary network invariants."""


class NotLevel1Error(InvalidNetworkError):
    """An operation requiring a level-1 network received another class."""


class LeafSetMismatchError(PhyloError):
    """Trees or networks compared on different leaf sets."""


class ClusterError(PhyloError):
    """A taxon set is empty, unknown, or not a cluster where one is required."""


class IdenticalTreesError(PhyloError):
    """A distance-one query received isomorphic trees."""


class NotDistanceOneError(PhyloError):
    """Moving subtrees requested for trees that are not one rSPR move apart."""


class DuplicateTreeError(PhyloError):
    """A tree collection contains the same tree twice."""


class CapExceededError(PhyloError):
    """A computation would exceed a configured size cap."""


class NotHypercubeError(PhyloError):
    """A graph expected to be a hypercube is not one."""


class InfeasibleConfigError(PhyloError):
    """A generator configuration cannot be satisfied."""


class InvariantViolation(RuntimeError):
    """An internal guarantee failed; indicates a bug, not bad input."""
