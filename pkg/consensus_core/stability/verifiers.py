"""Consensus core stability verifiers module"""

import logging
from itertools import combinations
from typing import Iterator
from typing import Optional
from typing import Sequence
from typing import Tuple

from consensus_core.detection.conditions import check_flexible_condition1
from consensus_core.detection.datatypes import ConsensusKind
from consensus_core.detection.detectors import passing_candidates
from consensus_core.exceptions import PreconditionError
from consensus_core.preferences.datatypes import Preference
from consensus_core.preferences.datatypes import Profile
from consensus_core.preferences.switches import apply_switch
from consensus_core.stability.datatypes import MajorityRelation
from consensus_core.stability.datatypes import ScoringRule
from consensus_core.stability.datatypes import StabilityReport
from consensus_core.stability.majority import majority_relation
from consensus_core.stability.scoring import scoring_battery
from consensus_core.stability.scoring import scoring_totals
from consensus_core.types import Alternative

log = logging.getLogger(__name__)


def _ordered_pairs(
    pivot: Preference,
) -> Iterator[Tuple[Alternative, Alternative]]:
    """Pairs (a, b) with a ranked above b by ``pivot``."""
    return combinations(pivot.ranking, 2)


class StabilityVerifier:
    def __init__(
        self,
        profile: Profile,
        pivot: Preference,
        rules: Optional[Sequence[ScoringRule]] = None,
    ):
        self.profile = profile
        self.pivot = pivot
        self.rules = rules

    def verify(self) -> StabilityReport:
        if not check_flexible_condition1(self.profile, self.pivot):
            raise PreconditionError(
                f"{self.pivot} does not satisfy Flexible Condition 1"
            )
        report = StabilityReport(self.pivot, self.profile.n)
        majority = majority_relation(self.profile)

        self._check_majority(report, majority)
        if self.profile.n % 2:
            self._check_odd(report, majority)
        else:
            self._check_even(report, majority)
        self._check_scoring(report)

        if not report.ok:
            log.warning(
                "%d stability violations around %s",
                len(report.violations),
                self.pivot,
            )
        return report

    def _check_majority(
        self, report: StabilityReport, majority: MajorityRelation
    ) -> None:
        report.checks.append("majority_agrees")
        for a, b in _ordered_pairs(self.pivot):
            if not majority.beats(a, b):
                report.add("majority_agrees", f"{b} strictly beats {a}")
        report.checks.append("condorcet_winner")
        best = self.pivot.best
        for b in range(self.profile.K):
            if b != best and not majority.beats(best, b):
                report.add("condorcet_winner", f"{best} loses to {b}")

    def _check_odd(
        self, report: StabilityReport, majority: MajorityRelation
    ) -> None:
        report.checks.append("odd_majority_order")
        order = majority.strict_order()
        if order != self.pivot:
            report.add(
                "odd_majority_order",
                f"strict majority order {order} differs from {self.pivot}",
            )
        report.checks.append("odd_unique_pivot")
        passing = passing_candidates(self.profile, ConsensusKind.FLEXIBLE)
        if passing != [self.pivot]:
            report.add(
                "odd_unique_pivot",
                f"pivots {', '.join(map(str, passing))}",
            )

    def _check_even(
        self, report: StabilityReport, majority: MajorityRelation
    ) -> None:
        report.checks.append("even_witness")
        for b, a in _ordered_pairs(self.pivot):
            if not majority.beats(a, b):
                continue
            witness = apply_switch(self.pivot, a, b)
            if not check_flexible_condition1(self.profile, witness):
                report.add(
                    "even_witness",
                    f"{a} ties {b} but {witness} is not a pivot",
                )

    def _check_scoring(self, report: StabilityReport) -> None:
        rules = self.rules
        if rules is None:
            rules = scoring_battery(self.profile.K)
        for rule in rules:
            report.checks.append(f"scoring:{rule.name}")
            totals = scoring_totals(self.profile, rule)
            for a, b in _ordered_pairs(self.pivot):
                if totals[a] < totals[b]:
                    report.add(
                        f"scoring:{rule.name}",
                        f"{b} outscores {a} ({totals[b]} > {totals[a]})",
                    )


def verify_stability(
    profile: Profile,
    pivot: Preference,
    rules: Optional[Sequence[ScoringRule]] = None,
) -> StabilityReport:
    """Check the majority, Condorcet and scoring-rule properties that
    hold around any flexible consensus pivot."""
    return StabilityVerifier(profile, pivot, rules).verify()
