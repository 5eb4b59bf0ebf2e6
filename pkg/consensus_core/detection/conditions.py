"""Consensus core detection conditions module"""

import logging
from itertools import combinations
from typing import Iterable
from typing import List

from more_itertools import pairwise

from consensus_core.detection.datatypes import RankedRecord
from consensus_core.exceptions import DimensionError
from consensus_core.preferences.datatypes import Preference
from consensus_core.preferences.datatypes import Profile
from consensus_core.preferences.distances import inversion_distance
from consensus_core.preferences.mahonian import closure_holds

log = logging.getLogger(__name__)


def rank_records(
    profile: Profile, candidate: Preference
) -> List[RankedRecord]:
    """Stored preferences by descending frequency, then ascending
    distance to ``candidate``, then preference order."""
    if candidate.K != profile.K:
        raise DimensionError(profile.K, candidate.K)
    records = [
        RankedRecord(
            frequency,
            inversion_distance(preference, candidate),
            preference,
        )
        for preference, frequency in profile.entries.items()
    ]
    return sorted(records, key=lambda record: record.sort_key)


def _violates(
    upper: RankedRecord, lower: RankedRecord, flexible: bool
) -> bool:
    if upper.frequency <= lower.frequency:
        return False
    if flexible:
        return upper.distance > lower.distance
    return upper.distance >= lower.distance


def scan_adjacent(
    records: Iterable[RankedRecord], flexible: bool = False
) -> bool:
    """Whether no adjacent pair of sorted records breaks the
    frequency/distance implication."""
    return not any(
        _violates(upper, lower, flexible)
        for upper, lower in pairwise(records)
    )


def scan_all_pairs(
    records: Iterable[RankedRecord], flexible: bool = False
) -> bool:
    """All-pairs version of :func:`scan_adjacent`, any record order."""
    return not any(
        _violates(x, y, flexible) or _violates(y, x, flexible)
        for x, y in combinations(list(records), 2)
    )


class BaseConditionChecker:
    flexible: bool = NotImplemented

    def __init__(self, profile: Profile):
        self.profile = profile

    def check(self, candidate: Preference) -> bool:
        records = rank_records(self.profile, candidate)
        frequency = self.profile.frequency(candidate)
        if frequency == 0 or frequency != self.profile.max_frequency:
            log.debug("%s is not of maximal frequency", candidate)
            return False
        if not scan_adjacent(records, self.flexible):
            log.debug("%s fails the adjacent scan", candidate)
            return False
        d_hat = max(record.distance for record in records)
        passed = self._closure(records, d_hat)
        if not passed:
            log.debug("%s fails the closure test at %d", candidate, d_hat)
        return passed

    def _closure(self, records: List[RankedRecord], d_hat: int) -> bool:
        raise NotImplementedError


class Condition1Checker(BaseConditionChecker):
    """Every preference within d_hat must be stored."""

    flexible = False

    def _closure(self, records: List[RankedRecord], d_hat: int) -> bool:
        return closure_holds(self.profile.K, d_hat, len(records))


class FlexibleCondition1Checker(BaseConditionChecker):
    """Every preference within d_hat - 1 must be stored."""

    flexible = True

    def _closure(self, records: List[RankedRecord], d_hat: int) -> bool:
        inner = sum(1 for record in records if record.distance < d_hat)
        return closure_holds(self.profile.K, d_hat - 1, inner)


def check_condition1(profile: Profile, candidate: Preference) -> bool:
    return Condition1Checker(profile).check(candidate)


def check_flexible_condition1(
    profile: Profile, candidate: Preference
) -> bool:
    return FlexibleCondition1Checker(profile).check(candidate)
