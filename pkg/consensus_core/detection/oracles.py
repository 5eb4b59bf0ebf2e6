"""Consensus core detection oracles module

Direct evaluation of both consensus definitions over every one of the K!
preferences, zero-frequency ones included. Slow; meant for tests.
"""

import logging
from itertools import combinations
from typing import List
from typing import Optional

import numpy as np
from numpy.typing import NDArray

from consensus_core.detection.datatypes import ConsensusKind
from consensus_core.detection.datatypes import ConsensusReport
from consensus_core.detection.datatypes import FailureReason
from consensus_core.detection.datatypes import Outcome
from consensus_core.exceptions import ArgumentError
from consensus_core.preferences.datatypes import Preference
from consensus_core.preferences.datatypes import Profile
from consensus_core.preferences.distances import inversion_distance
from consensus_core.preferences.factories import enumerate_preferences

log = logging.getLogger(__name__)


def _pair_orders(
    preferences: List[Preference], K: int
) -> NDArray[np.bool_]:
    """Whether preference x ranks the k-th alternative pair in order."""
    positions = np.array([p.positions for p in preferences])
    pairs = np.array(list(combinations(range(K), 2)))
    return positions[:, pairs[:, 0]] < positions[:, pairs[:, 1]]


def _holds(
    mu: NDArray[np.int64],
    distances: NDArray[np.int64],
    kind: ConsensusKind,
) -> bool:
    # rows: the more frequent preference; columns: the other one
    more_frequent = mu[:, None] > mu[None, :]
    closer = distances[:, None] < distances[None, :]
    if kind == ConsensusKind.FLEXIBLE:
        not_farther = distances[:, None] <= distances[None, :]
        return not bool(np.any(more_frequent & ~not_farther))
    if np.any(more_frequent & ~closer):
        return False
    return bool(np.any(more_frequent & closer))


def brute_force_detect(
    profile: Profile,
    kind: ConsensusKind,
    cap: Optional[int] = None,
) -> ConsensusReport:
    """Evaluate level-1 or flexible consensus over all K! candidates."""
    if profile.is_empty:
        raise ArgumentError("cannot detect consensus in empty profile")
    preferences = enumerate_preferences(profile.K, cap)
    mu = np.array([profile.frequency(p) for p in preferences])
    orders = _pair_orders(preferences, profile.K)

    pivots: List[Preference] = []
    for index, candidate in enumerate(preferences):
        distances = np.count_nonzero(orders != orders[index], axis=1)
        if _holds(mu, distances, kind):
            pivots.append(candidate)

    if not pivots:
        if kind == ConsensusKind.FLEXIBLE:
            reason = FailureReason.FLEXIBLE_CONDITION1_VIOLATED
        elif len(set(mu.tolist())) == 1:
            reason = FailureReason.CONDITION2_VIOLATED
        else:
            reason = FailureReason.CONDITION1_VIOLATED
        return ConsensusReport(
            kind=kind,
            outcome=Outcome.NOT_FOUND,
            failure_reason=reason,
            max_frequency=profile.max_frequency,
        )

    log.debug("oracle found %d %s pivots", len(pivots), kind.value)
    return ConsensusReport(
        kind=kind,
        outcome=Outcome.FOUND,
        pivots=pivots,
        max_frequency=profile.max_frequency,
        d_hat=max(inversion_distance(p, pivots[0]) for p in profile),
    )
