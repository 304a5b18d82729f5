# crslab/utils/rng.py
"""
Seeded random streams

Every sampler takes an explicit ``numpy.random.Generator``. Streams are
counter-based (Philox) and keyed by ``SeedSequence(seed, spawn_key=(stream,))``
so a (seed, stream) pair reproduces the same draws on every platform.
"""

from __future__ import annotations

from typing import List

import numpy as np

from ..config.constants import DEFAULT_SEED, MAX_SEED
from .errors import DomainError


def make_rng(seed: int = DEFAULT_SEED, stream: int = 0) -> np.random.Generator:
    """Build an independent generator for ``(seed, stream)``

    Args:
        seed: 64-bit unsigned seed
        stream: Stream id; distinct ids give statistically independent streams

    Returns:
        numpy Generator over a Philox bit generator
    """
    if not 0 <= seed <= MAX_SEED:
        raise DomainError(f"seed must be in [0, {MAX_SEED}], got {seed}")
    if stream < 0:
        raise DomainError(f"stream id must be nonnegative, got {stream}")
    sequence = np.random.SeedSequence(seed, spawn_key=(stream,))
    return np.random.Generator(np.random.Philox(sequence))


def stream_sizes(total: int, chunk: int) -> List[int]:
    """Split ``total`` draws into chunks; chunk i runs on stream i"""
    if total <= 0:
        return []
    full, rest = divmod(total, chunk)
    sizes = [chunk] * full
    if rest:
        sizes.append(rest)
    return sizes
