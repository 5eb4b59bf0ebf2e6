"""Consensus core shortcuts module"""

from typing import Optional

from jsonschema.validators import _UNSET

from consensus_core.app import ProfileAnalyzer
from consensus_core.configurations import Config
from consensus_core.detection.datatypes import ConsensusReport
from consensus_core.detection.types import DetectorType
from consensus_core.preferences.datatypes import Preference
from consensus_core.preferences.datatypes import Profile
from consensus_core.stability.datatypes import StabilityReport


def detect_level1(
    profile: Profile, cls: Optional[DetectorType] = None
) -> ConsensusReport:
    config = Config(level1_detector_cls=cls or _UNSET)
    return ProfileAnalyzer(profile, config=config).level1


def detect_flexible(
    profile: Profile, cls: Optional[DetectorType] = None
) -> ConsensusReport:
    config = Config(flexible_detector_cls=cls or _UNSET)
    return ProfileAnalyzer(profile, config=config).flexible


def validate_stability(
    profile: Profile,
    pivot: Optional[Preference] = None,
    config: Optional[Config] = None,
) -> StabilityReport:
    """Verify stability around ``pivot`` and raise on any violation."""
    report = ProfileAnalyzer(profile, config=config).verify_stability(pivot)
    report.raise_for_violations()
    return report
