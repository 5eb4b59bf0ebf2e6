"""Consensus core experiments streams module

Every trial draws from its own counter-based Philox stream keyed by the
master seed and the trial index, so trials can run in any order or in
parallel and still reproduce bit for bit.
"""

from typing import Union

import numpy as np

SeedLike = Union[int, np.random.Generator]


def trial_rng(master_seed: int, trial_index: int) -> np.random.Generator:
    sequence = np.random.SeedSequence(
        master_seed, spawn_key=(trial_index,)
    )
    return np.random.Generator(np.random.Philox(sequence))


def as_rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.Philox(seed))
