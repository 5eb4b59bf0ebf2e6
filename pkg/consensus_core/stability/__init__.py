"""Consensus core stability module"""

from consensus_core.stability.datatypes import MajorityRelation
from consensus_core.stability.datatypes import ScoringRule
from consensus_core.stability.datatypes import SinglePeakedResult
from consensus_core.stability.datatypes import StabilityReport
from consensus_core.stability.datatypes import Violation
from consensus_core.stability.domains import brute_force_single_peaked
from consensus_core.stability.domains import is_single_peaked
from consensus_core.stability.domains import single_peaked_axis
from consensus_core.stability.exceptions import StabilityViolation
from consensus_core.stability.majority import majority_relation
from consensus_core.stability.majority import weak_condorcet_winners
from consensus_core.stability.scoring import scoring_battery
from consensus_core.stability.scoring import scoring_totals
from consensus_core.stability.verifiers import verify_stability

__all__ = [
    "MajorityRelation",
    "ScoringRule",
    "SinglePeakedResult",
    "StabilityReport",
    "StabilityViolation",
    "Violation",
    "brute_force_single_peaked",
    "is_single_peaked",
    "majority_relation",
    "scoring_battery",
    "scoring_totals",
    "single_peaked_axis",
    "verify_stability",
    "weak_condorcet_winners",
]
