"""Consensus core detection detectors module"""

import logging
from typing import List
from typing import Optional
from typing import Type

from consensus_core.detection.conditions import BaseConditionChecker
from consensus_core.detection.conditions import Condition1Checker
from consensus_core.detection.conditions import FlexibleCondition1Checker
from consensus_core.detection.datatypes import ConsensusKind
from consensus_core.detection.datatypes import ConsensusReport
from consensus_core.detection.datatypes import FailureReason
from consensus_core.detection.datatypes import Outcome
from consensus_core.exceptions import ArgumentError
from consensus_core.preferences.datatypes import Preference
from consensus_core.preferences.datatypes import Profile
from consensus_core.preferences.distances import inversion_distance

log = logging.getLogger(__name__)


class BaseConsensusDetector:
    kind: ConsensusKind = NotImplemented
    checker_cls: Type[BaseConditionChecker] = NotImplemented
    failure_reason: FailureReason = NotImplemented

    def __init__(self, profile: Profile):
        if profile.is_empty:
            raise ArgumentError("cannot detect consensus in empty profile")
        self.profile = profile

    def detect(self) -> ConsensusReport:
        max_frequency = self.profile.max_frequency
        reason = self._precheck()
        if reason is not None:
            log.debug("%s consensus ruled out: %s", self.kind.value, reason)
            return self._not_found(reason)

        checker = self.checker_cls(self.profile)
        pivots = [c for c in self.profile.candidates() if checker.check(c)]
        if not pivots:
            return self._not_found(self.failure_reason)

        d_hat = max(
            inversion_distance(preference, pivots[0])
            for preference in self.profile
        )
        log.debug(
            "%s consensus around %s (%d pivots)",
            self.kind.value,
            pivots[0],
            len(pivots),
        )
        return ConsensusReport(
            kind=self.kind,
            outcome=Outcome.FOUND,
            pivots=pivots,
            max_frequency=max_frequency,
            d_hat=d_hat,
        )

    def _precheck(self) -> Optional[FailureReason]:
        return None

    def _not_found(self, reason: FailureReason) -> ConsensusReport:
        return ConsensusReport(
            kind=self.kind,
            outcome=Outcome.NOT_FOUND,
            failure_reason=reason,
            max_frequency=self.profile.max_frequency,
        )


class Level1ConsensusDetector(BaseConsensusDetector):
    kind = ConsensusKind.LEVEL1
    checker_cls = Condition1Checker
    failure_reason = FailureReason.CONDITION1_VIOLATED

    def _precheck(self) -> Optional[FailureReason]:
        frequencies = set(self.profile.entries.values())
        # no pair of preferences differs in frequency
        if len(frequencies) == 1 and self.profile.is_complete:
            return FailureReason.CONDITION2_VIOLATED
        return None


class FlexibleConsensusDetector(BaseConsensusDetector):
    kind = ConsensusKind.FLEXIBLE
    checker_cls = FlexibleCondition1Checker
    failure_reason = FailureReason.FLEXIBLE_CONDITION1_VIOLATED


def detect_level1(profile: Profile) -> ConsensusReport:
    return Level1ConsensusDetector(profile).detect()


def detect_flexible(profile: Profile) -> ConsensusReport:
    return FlexibleConsensusDetector(profile).detect()


def passing_candidates(
    profile: Profile, kind: ConsensusKind
) -> List[Preference]:
    """Maximal-frequency candidates passing the condition of ``kind``."""
    checker_cls: Type[BaseConditionChecker] = (
        FlexibleCondition1Checker
        if kind == ConsensusKind.FLEXIBLE
        else Condition1Checker
    )
    checker = checker_cls(profile)
    return [c for c in profile.candidates() if checker.check(c)]
