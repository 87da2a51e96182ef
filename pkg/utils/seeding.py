"""Seed derivation so every random stream flows from one user seed."""
from typing import List

import numpy as np


def derive_seed(seed: int, *keys: int) -> int:
    """
    Derive a 64-bit child seed from a root seed and integer keys.

    Args:
        seed: Root seed
        *keys: Path of non-negative integers identifying the stream

    Returns:
        Deterministic 64-bit integer
    """
    sequence = np.random.SeedSequence(entropy=int(seed) & (2 ** 64 - 1), spawn_key=tuple(int(k) for k in keys))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def spawn_generators(seed: int, count: int) -> List[np.random.Generator]:
    """Independent generators, one per restart."""
    root = np.random.SeedSequence(entropy=int(seed) & (2 ** 64 - 1))
    return [np.random.default_rng(child) for child in root.spawn(count)]
