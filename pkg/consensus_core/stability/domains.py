"""Consensus core stability domains module"""

import logging
from itertools import permutations
from typing import List
from typing import Optional
from typing import Set
from typing import Tuple

from consensus_core.preferences.datatypes import Preference
from consensus_core.preferences.datatypes import Profile
from consensus_core.preferences.factories import DEFAULT_ENUMERATION_CAP
from consensus_core.stability.datatypes import SinglePeakedResult
from consensus_core.stability.datatypes import is_single_peaked_on
from consensus_core.types import Alternative
from consensus_core.util import check_cap

log = logging.getLogger(__name__)

DEFAULT_SINGLE_PEAKED_CAP = 300


class _Voter:
    """Incremental view of one ballot while the axis is built."""

    def __init__(self, preference: Preference):
        self.ranking = preference.ranking
        self.positions = preference.positions
        self.best_left = len(self.ranking)
        self.best_right = len(self.ranking)
        self._front_left = 0
        self._front_right = 0
        self._back = len(self.ranking) - 1

    def bottom(self, placed: Set[Alternative]) -> Alternative:
        while self.ranking[self._back] in placed:
            self._back -= 1
        return self.ranking[self._back]

    def top_outside(self, side: Set[Alternative], left: bool) -> Alternative:
        front = self._front_left if left else self._front_right
        while self.ranking[front] in side:
            front += 1
        if left:
            self._front_left = front
        else:
            self._front_right = front
        return self.ranking[front]

    def accepts(
        self, z: Alternative, side: Set[Alternative], left: bool
    ) -> bool:
        # z sits next to the block on its side: it either beats that
        # whole block or everything still on the other side of it
        best = self.best_left if left else self.best_right
        if self.positions[z] < best:
            return True
        return self.top_outside(side, left) == z

    def place(self, z: Alternative, left: bool) -> None:
        if left:
            self.best_left = min(self.best_left, self.positions[z])
        else:
            self.best_right = min(self.best_right, self.positions[z])


class SinglePeakedRecognizer:
    """Builds an axis from both ends, placing the alternatives that some
    voter ranks last among those not yet placed."""

    def __init__(self, profile: Profile):
        self.profile = profile

    def axis(self) -> Optional[Tuple[Alternative, ...]]:
        K = self.profile.K
        voters = [_Voter(p) for p in self.profile]
        remaining = set(range(K))
        left: List[Alternative] = []
        right: List[Alternative] = []
        left_set: Set[Alternative] = set()
        right_set: Set[Alternative] = set()

        def fits(z: Alternative, on_left: bool) -> bool:
            side = left_set if on_left else right_set
            return all(v.accepts(z, side, on_left) for v in voters)

        def put(z: Alternative, on_left: bool) -> None:
            for voter in voters:
                voter.place(z, on_left)
            (left if on_left else right).append(z)
            (left_set if on_left else right_set).add(z)
            remaining.discard(z)

        while remaining:
            placed = left_set | right_set
            bottoms = sorted({v.bottom(placed) for v in voters})
            if not bottoms:
                bottoms = [min(remaining)]
            if len(bottoms) > 2:
                log.debug("bottoms %s cannot all sit on axis ends", bottoms)
                return None
            if len(bottoms) == 2:
                x, y = bottoms
                if fits(x, True) and fits(y, False):
                    put(x, True)
                    put(y, False)
                elif fits(y, True) and fits(x, False):
                    put(y, True)
                    put(x, False)
                else:
                    return None
                continue
            (z,) = bottoms
            if fits(z, True):
                put(z, True)
            elif fits(z, False):
                put(z, False)
            else:
                return None
        return tuple(left + right[::-1])


def single_peaked_axis(
    profile: Profile, cap: Optional[int] = None
) -> Optional[Tuple[Alternative, ...]]:
    check_cap(
        "single_peaked_axis",
        profile.K,
        DEFAULT_SINGLE_PEAKED_CAP if cap is None else cap,
    )
    return SinglePeakedRecognizer(profile).axis()


def is_single_peaked(
    profile: Profile, cap: Optional[int] = None
) -> SinglePeakedResult:
    """Whether some axis makes every ballot single-peaked."""
    return SinglePeakedResult(single_peaked_axis(profile, cap))


def brute_force_single_peaked(
    profile: Profile, cap: Optional[int] = None
) -> SinglePeakedResult:
    """Tries every axis up to reversal."""
    K = profile.K
    check_cap(
        "brute_force_single_peaked",
        K,
        DEFAULT_ENUMERATION_CAP if cap is None else cap,
    )
    for axis in permutations(range(K)):
        if axis[0] > axis[-1]:
            continue
        if all(is_single_peaked_on(p.ranking, axis) for p in profile):
            return SinglePeakedResult(axis)
    return SinglePeakedResult()
