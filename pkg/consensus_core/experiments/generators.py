"""Consensus core experiments generators module"""

import logging
from typing import Callable
from typing import Dict
from typing import List
from typing import Optional

import numpy as np
from numpy.typing import NDArray

from consensus_core.exceptions import ArgumentError
from consensus_core.experiments.datatypes import GeneratorSpec
from consensus_core.experiments.datatypes import ImpartialParams
from consensus_core.experiments.datatypes import MallowsParams
from consensus_core.experiments.datatypes import Model
from consensus_core.experiments.streams import SeedLike
from consensus_core.experiments.streams import as_rng
from consensus_core.preferences.datatypes import Preference
from consensus_core.preferences.datatypes import Profile
from consensus_core.preferences.distances import inversion_distance
from consensus_core.preferences.factories import enumerate_preferences
from consensus_core.util import orders_count

log = logging.getLogger(__name__)

ProfileGenerator = Callable[[np.random.Generator], Profile]


def _insertion_weights(phi: float, i: int) -> NDArray[np.float64]:
    # slot j of i + 1 costs i - j inversions against the reference
    weights = phi ** (i - np.arange(i + 1, dtype=float))
    return weights / weights.sum()


def mallows_profile(params: MallowsParams, n: int, seed: SeedLike) -> Profile:
    """Draw n ballots by repeated insertion of the reference order."""
    if n < 1:
        raise ArgumentError(f"n must be at least 1, got {n}")
    rng = as_rng(seed)
    reference = params.center.ranking
    slots = np.empty((n, params.K), dtype=np.int64)
    for i in range(params.K):
        weights = _insertion_weights(params.phi, i)
        slots[:, i] = rng.choice(i + 1, size=n, p=weights)

    entries: Dict[Preference, int] = {}
    for row in slots.tolist():
        ranking: List[int] = []
        for item, slot in zip(reference, row):
            ranking.insert(slot, item)
        preference = Preference(tuple(ranking))
        entries[preference] = entries.get(preference, 0) + 1
    log.debug("drew %d Mallows ballots (phi=%s)", n, params.phi)
    return Profile(params.K, entries)


def mallows_probabilities(
    params: MallowsParams, cap: Optional[int] = None
) -> Dict[Preference, float]:
    """Exact Mallows law by enumeration of all K! preferences."""
    preferences = enumerate_preferences(params.K, cap)
    weights = np.array(
        [
            params.phi ** inversion_distance(p, params.center)
            for p in preferences
        ]
    )
    weights /= weights.sum()
    return dict(zip(preferences, weights.tolist()))


def impartial_profile(
    params: ImpartialParams, seed: SeedLike, cap: Optional[int] = None
) -> Profile:
    """One Binomial(m, 1/K!) draw per preference; zero draws omitted."""
    preferences = enumerate_preferences(params.K, cap)
    rng = as_rng(seed)
    p = 1.0 / orders_count(params.K)
    draws = rng.binomial(params.m, p, size=len(preferences))
    entries = {
        preference: int(count)
        for preference, count in zip(preferences, draws.tolist())
        if count
    }
    if not entries:
        log.warning("impartial process produced an empty profile")
    return Profile(params.K, entries)


def reference_profile(K: int, n: int, seed: SeedLike = 0) -> Profile:
    """Limit of Mallows as phi goes to 0: everyone holds the identity."""
    if n < 1:
        raise ArgumentError(f"n must be at least 1, got {n}")
    return Profile(K, {Preference.identity(K): n})


def create_generator(
    spec: GeneratorSpec, cap: Optional[int] = None
) -> ProfileGenerator:
    if spec.model == Model.MALLOWS:
        assert spec.phi is not None
        params = MallowsParams(spec.K, spec.phi)
        return lambda rng: mallows_profile(params, spec.size, rng)
    if spec.model == Model.IMPARTIAL:
        impartial = ImpartialParams(spec.K, spec.size)
        return lambda rng: impartial_profile(impartial, rng, cap)
    return lambda rng: reference_profile(spec.K, spec.size, rng)
