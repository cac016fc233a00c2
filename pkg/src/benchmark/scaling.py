# File: src/benchmark/scaling.py

# -*- coding: utf-8 -*-

"""
Wall-clock scaling of reconstruction with the number of input trees.

Each family member is the display set of a random level-1 network without
trivial reticulations on a fixed taxon set, so |P| = 2^k doubles with each
extra reticulation while |X| stays put.
"""

import time
from typing import Sequence

import numpy as np
import pandas as pd
from tqdm import tqdm

from src.display.display_set import display_set
from src.level1.construct import reconstruct
from src.oracle.generators import GeneratorConfig, find_network
from src.utils.logging_utils import get_module_logger

# Module logger
logger = get_module_logger("benchmark")

DEFAULT_SIZES = (8, 16, 32)


def measure_reconstruction_scaling(
    sizes: Sequence[int] = DEFAULT_SIZES,
    leaves: int = 10,
    repeats: int = 3,
    seed: int = 0,
    progress: bool = False,
) -> pd.DataFrame:
    """
    Time reconstruction on display sets of increasing size.

    Args:
        sizes: Display-set sizes; each must be a power of two.
        leaves: Number of taxa, fixed across the family.
        repeats: Runs per size; the fastest is kept.
        seed: First seed tried by the network search.
        progress: Show a progress bar over sizes.

    Returns:
        pd.DataFrame: One row per size with columns trees, k, leaves, seconds, decision.
    """
    rows = []
    for size in tqdm(sizes, disable=not progress, desc='Scaling'):
        k = int(size).bit_length() - 1
        if 2 ** k != size:
            raise ValueError(f"Display-set size {size} is not a power of two")
        cfg = GeneratorConfig(leaves=leaves, reticulations=k, target='level1', seed=seed, no_trivial=True)
        network = find_network(lambda n: display_set(n).is_maximum, cfg)
        trees = list(display_set(network).trees)

        timings = []
        decision = False
        for _ in range(repeats):
            start = time.perf_counter()
            decision = reconstruct(trees).decision
            timings.append(time.perf_counter() - start)
        rows.append({
            'trees': size,
            'k': k,
            'leaves': leaves,
            'seconds': min(timings),
            'decision': decision,
        })
        logger.debug(f"|P|={size}: best of {repeats} runs {min(timings):.4f}s")
    return pd.DataFrame(rows)


def growth_factors(df: pd.DataFrame) -> pd.Series:
    """Ratio of each size's time to the previous size's time."""
    ordered = df.sort_values('trees')
    return (ordered['seconds'] / ordered['seconds'].shift(1)).iloc[1:].reset_index(drop=True)


def fit_exponent(df: pd.DataFrame) -> float:
    """Slope of log(seconds) against log(trees); quadratic growth gives about 2."""
    slope, _ = np.polyfit(np.log(df['trees'].to_numpy(float)), np.log(df['seconds'].to_numpy(float)), 1)
    return float(slope)
