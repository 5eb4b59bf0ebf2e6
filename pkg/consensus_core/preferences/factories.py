"""Consensus core preferences factories module"""

from collections import Counter
from itertools import permutations
from typing import List
from typing import Optional
from typing import Sequence

from consensus_core.exceptions import ArgumentError
from consensus_core.preferences.datatypes import MIN_ALTERNATIVES
from consensus_core.preferences.datatypes import Preference
from consensus_core.preferences.datatypes import Profile
from consensus_core.preferences.datatypes import common_dimension
from consensus_core.util import check_cap

DEFAULT_ENUMERATION_CAP = 8


def enumerate_preferences(
    K: int, cap: Optional[int] = None
) -> List[Preference]:
    """All K! preferences in lexicographic order."""
    if K < MIN_ALTERNATIVES:
        raise ArgumentError(
            f"K must be at least {MIN_ALTERNATIVES}, got {K}"
        )
    check_cap(
        "enumerate_preferences",
        K,
        DEFAULT_ENUMERATION_CAP if cap is None else cap,
    )
    return [Preference(ranking) for ranking in permutations(range(K))]


def profile_from_ballots(ballots: Sequence[Preference]) -> Profile:
    if not ballots:
        raise ArgumentError("profile needs at least one ballot")
    K = common_dimension(ballots)
    return Profile(K, Counter(ballots))
