"""Consensus core stability scoring module"""

from typing import List
from typing import Tuple

import numpy as np

from consensus_core.exceptions import DimensionError
from consensus_core.preferences.datatypes import Profile
from consensus_core.stability.datatypes import ScoringRule


def scoring_totals(profile: Profile, rule: ScoringRule) -> Tuple[int, ...]:
    """Total score of every alternative under ``rule``."""
    if rule.K != profile.K:
        raise DimensionError(profile.K, rule.K, "scores")
    totals = np.zeros(profile.K, dtype=np.int64)
    scores = np.asarray(rule.scores, dtype=np.int64)
    for preference, frequency in profile.entries.items():
        totals[list(preference.ranking)] += frequency * scores
    return tuple(totals.tolist())


def scoring_battery(
    K: int, random_vectors: int = 5, seed: int = 0
) -> List[ScoringRule]:
    """Plurality, Borda, veto, every step vector and seeded random
    nonincreasing integer vectors."""
    rules = [ScoringRule.plurality(K), ScoringRule.borda(K)]
    rules.append(ScoringRule.veto(K))
    rules.extend(ScoringRule.step(K, cut) for cut in range(1, K))
    rng = np.random.default_rng(seed)
    for index in range(random_vectors):
        draw = np.sort(rng.integers(0, 10 * K, size=K))[::-1]
        rules.append(ScoringRule(tuple(draw.tolist()), f"random-{index}"))
    return rules
