"""Consensus core module"""

from consensus_core.app import ProfileAnalyzer
from consensus_core.configurations import Config
from consensus_core.detection import ConsensusKind
from consensus_core.detection import ConsensusReport
from consensus_core.detection import brute_force_detect
from consensus_core.detection import check_condition1
from consensus_core.detection import check_flexible_condition1
from consensus_core.preferences import Preference
from consensus_core.preferences import Profile
from consensus_core.preferences import apply_switch
from consensus_core.preferences import inversion_distance
from consensus_core.preferences import mahonian_table
from consensus_core.shortcuts import detect_flexible
from consensus_core.shortcuts import detect_level1
from consensus_core.shortcuts import validate_stability

__author__ = "consensus-core developers"
__version__ = "0.1.0"
__license__ = "BSD-3-Clause"

__all__ = [
    "Config",
    "ConsensusKind",
    "ConsensusReport",
    "Preference",
    "Profile",
    "ProfileAnalyzer",
    "apply_switch",
    "brute_force_detect",
    "check_condition1",
    "check_flexible_condition1",
    "detect_flexible",
    "detect_level1",
    "inversion_distance",
    "mahonian_table",
    "validate_stability",
]
