"""Consensus core detection module"""

from consensus_core.detection.conditions import check_condition1
from consensus_core.detection.conditions import check_flexible_condition1
from consensus_core.detection.conditions import rank_records
from consensus_core.detection.conditions import scan_adjacent
from consensus_core.detection.conditions import scan_all_pairs
from consensus_core.detection.datatypes import ConsensusKind
from consensus_core.detection.datatypes import ConsensusReport
from consensus_core.detection.datatypes import FailureReason
from consensus_core.detection.datatypes import Outcome
from consensus_core.detection.detectors import BaseConsensusDetector
from consensus_core.detection.detectors import FlexibleConsensusDetector
from consensus_core.detection.detectors import Level1ConsensusDetector
from consensus_core.detection.detectors import detect_flexible
from consensus_core.detection.detectors import detect_level1
from consensus_core.detection.oracles import brute_force_detect

__all__ = [
    "BaseConsensusDetector",
    "ConsensusKind",
    "ConsensusReport",
    "FailureReason",
    "FlexibleConsensusDetector",
    "Level1ConsensusDetector",
    "Outcome",
    "brute_force_detect",
    "check_condition1",
    "check_flexible_condition1",
    "detect_flexible",
    "detect_level1",
    "rank_records",
    "scan_adjacent",
    "scan_all_pairs",
]
