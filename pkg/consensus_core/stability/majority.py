"""Consensus core stability majority module"""

from typing import Set

import numpy as np

from consensus_core.preferences.datatypes import Profile
from consensus_core.stability.datatypes import MajorityRelation
from consensus_core.types import Alternative


def majority_relation(profile: Profile) -> MajorityRelation:
    """Pairwise support counts weighted by frequency."""
    K = profile.K
    if profile.is_empty:
        return MajorityRelation(K, tuple((0,) * K for _ in range(K)))
    positions = np.array([p.positions for p in profile], dtype=np.int64)
    weights = np.array(list(profile.entries.values()), dtype=np.int64)
    above = positions[:, :, None] < positions[:, None, :]
    support = np.einsum("v,vab->ab", weights, above.astype(np.int64))
    return MajorityRelation(K, tuple(map(tuple, support.tolist())))


def weak_condorcet_winners(profile: Profile) -> Set[Alternative]:
    majority = majority_relation(profile)
    return {
        a
        for a in range(profile.K)
        if all(majority.beats(a, b) for b in range(profile.K) if b != a)
    }
