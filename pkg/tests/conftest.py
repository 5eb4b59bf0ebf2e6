from itertools import permutations

import numpy as np
import pytest

from consensus_core.preferences import Preference
from consensus_core.preferences import Profile


class Factory(dict):
    __getattr__ = dict.__getitem__
    __setattr__ = dict.__setitem__


def preference(*ranking):
    return Preference(tuple(ranking))


def profile_from_counts(counts, K=None):
    if K is None:
        K = len(next(iter(counts)))
    return Profile.from_pairs(K, counts.items())


def random_profile(rng, K, n_max, distinct_max=None):
    """Profile with 1..n_max voters spread over a random subset of
    preferences."""
    rankings = list(permutations(range(K)))
    distinct_max = distinct_max or len(rankings)
    size = int(rng.integers(1, min(distinct_max, len(rankings)) + 1))
    chosen = rng.choice(len(rankings), size=size, replace=False)
    n = int(rng.integers(size, max(size, n_max) + 1))
    weights = rng.dirichlet(np.ones(size))
    extra = rng.multinomial(n - size, weights)
    return Profile.from_pairs(
        K,
        [
            (rankings[index], 1 + int(more))
            for index, more in zip(chosen.tolist(), extra.tolist())
        ],
    )


@pytest.fixture(scope="session")
def profile_factory():
    return Factory(
        preference=preference,
        from_counts=profile_from_counts,
        random=random_profile,
    )


@pytest.fixture
def unanimous_profile():
    return profile_from_counts({(0, 1, 2): 5})


@pytest.fixture
def graded_profile():
    # frequencies 3; 2, 2; 1, 1; 1 by distance from (0, 1, 2)
    return profile_from_counts(
        {
            (0, 1, 2): 3,
            (0, 2, 1): 2,
            (1, 0, 2): 2,
            (1, 2, 0): 1,
            (2, 0, 1): 1,
            (2, 1, 0): 1,
        }
    )


@pytest.fixture
def unequal_neighbours_profile():
    return profile_from_counts({(0, 1, 2): 3, (1, 0, 2): 2, (0, 2, 1): 1})


@pytest.fixture
def flexible_only_profile():
    # frequencies 5; 3, 2; 2, 1 by distance, reversal absent
    return profile_from_counts(
        {
            (0, 1, 2): 5,
            (1, 0, 2): 3,
            (0, 2, 1): 2,
            (1, 2, 0): 2,
            (2, 0, 1): 1,
        }
    )


@pytest.fixture
def inverted_profile():
    return profile_from_counts({(0, 1, 2): 5, (1, 2, 0): 4, (1, 0, 2): 3})


@pytest.fixture
def uniform_profile():
    return profile_from_counts({r: 1 for r in permutations(range(3))})


@pytest.fixture
def cycle_profile():
    return profile_from_counts({(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1})


@pytest.fixture
def single_peaked_profile():
    return profile_from_counts(
        {(0, 1, 2): 1, (1, 0, 2): 1, (1, 2, 0): 1, (2, 1, 0): 1}
    )
