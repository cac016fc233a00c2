# File: src/hypercube/gray.py

# -*- coding: utf-8 -*-

"""
Reflected binary Gray codes and Hamming distance on bit strings.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from src.phylo.exceptions import CapExceededError, PhyloError
from src.utils.config_defaults import DEFAULT_LIMITS_CONFIG

GRAY_CODE_MAX_K = DEFAULT_LIMITS_CONFIG['max_tree_exponent']


def hamming(s: str, t: str) -> int:
    """
    Number of positions at which two equal-length bit strings differ.

    Raises:
        PhyloError: If the strings have different lengths.
    """
    if len(s) != len(t):
        raise PhyloError(f"Bit strings {s!r} and {t!r} have different lengths")
    return sum(a != b for a, b in zip(s, t))


@dataclass(frozen=True)
class GrayCode:
    """A cyclic ordering of all k-bit strings; neighbours (and last/first) differ in one bit."""

    k: int
    ordering: Tuple[str, ...]

    def __post_init__(self):
        if len(self.ordering) != 2 ** self.k:
            raise PhyloError(f"A {self.k}-bit Gray code has {2 ** self.k} strings, got {len(self.ordering)}")

    def __iter__(self) -> Iterator[str]:
        return iter(self.ordering)

    def __len__(self) -> int:
        return len(self.ordering)

    def __getitem__(self, i: int) -> str:
        return self.ordering[i]

    def is_cyclic(self) -> bool:
        """Whether every cyclically consecutive pair is at Hamming distance one."""
        if self.k == 0:
            return True
        n = len(self.ordering)
        return all(hamming(self.ordering[i], self.ordering[(i + 1) % n]) == 1 for i in range(n))

    def to_list(self) -> List[str]:
        return list(self.ordering)


def gray_code(k: int, max_k: Optional[int] = None) -> GrayCode:
    """
    The standard reflected Gray code on k bits.

    Args:
        k: Number of bits.
        max_k: Largest accepted k (defaults to the configured tree exponent cap).

    Returns:
        GrayCode: 2^k strings, starting at the all-zero string.

    Raises:
        PhyloError: If k is negative.
        CapExceededError: If k exceeds max_k.
    """
    max_k = GRAY_CODE_MAX_K if max_k is None else max_k
    if k < 0:
        raise PhyloError(f"Gray code length must be non-negative, got {k}")
    if k > max_k:
        raise CapExceededError(f"A {k}-bit Gray code has 2^{k} strings; exponential blow-up beyond {max_k} bits")
    if k == 0:
        return GrayCode(0, ('',))
    return GrayCode(k, tuple(format(i ^ (i >> 1), f'0{k}b') for i in range(2 ** k)))
