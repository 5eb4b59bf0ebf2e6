"""Consensus core app module"""

from functools import cached_property
from pathlib import Path
from typing import Any
from typing import Dict
from typing import Optional
from typing import Sequence
from typing import Union

from jsonschema._utils import Unset

from consensus_core.configurations import Config
from consensus_core.detection.datatypes import ConsensusKind
from consensus_core.detection.datatypes import ConsensusReport
from consensus_core.detection.detectors import FlexibleConsensusDetector
from consensus_core.detection.detectors import Level1ConsensusDetector
from consensus_core.detection.oracles import brute_force_detect
from consensus_core.detection.types import DetectorType
from consensus_core.exceptions import PreconditionError
from consensus_core.preferences.datatypes import Preference
from consensus_core.preferences.datatypes import Profile
from consensus_core.preferences.factories import profile_from_ballots
from consensus_core.preflib.datatypes import PreflibDocument
from consensus_core.preflib.parsers import read_preflib
from consensus_core.reports import report_document
from consensus_core.stability.datatypes import MajorityRelation
from consensus_core.stability.datatypes import SinglePeakedResult
from consensus_core.stability.datatypes import StabilityReport
from consensus_core.stability.domains import is_single_peaked
from consensus_core.stability.majority import majority_relation
from consensus_core.stability.scoring import scoring_battery
from consensus_core.stability.verifiers import verify_stability


class ProfileAnalyzer:
    """Profile analyzer class."""

    def __init__(
        self,
        profile: Profile,
        config: Optional[Config] = None,
    ):
        if not isinstance(profile, Profile):
            raise TypeError("'profile' argument is not type of Profile")

        self.profile = profile
        self.config = config or Config()

    @classmethod
    def from_ballots(
        cls, ballots: Sequence[Preference], config: Optional[Config] = None
    ) -> "ProfileAnalyzer":
        return cls(profile_from_ballots(ballots), config=config)

    @classmethod
    def from_document(
        cls, document: PreflibDocument, config: Optional[Config] = None
    ) -> "ProfileAnalyzer":
        return cls(document.to_profile(), config=config)

    @classmethod
    def from_path(
        cls, path: Union[str, Path], config: Optional[Config] = None
    ) -> "ProfileAnalyzer":
        return cls.from_document(read_preflib(path), config=config)

    @cached_property
    def level1_detector_cls(self) -> DetectorType:
        if not isinstance(self.config.level1_detector_cls, Unset):
            return self.config.level1_detector_cls
        return Level1ConsensusDetector

    @cached_property
    def flexible_detector_cls(self) -> DetectorType:
        if not isinstance(self.config.flexible_detector_cls, Unset):
            return self.config.flexible_detector_cls
        return FlexibleConsensusDetector

    @cached_property
    def level1(self) -> ConsensusReport:
        return self.level1_detector_cls(self.profile).detect()

    @cached_property
    def flexible(self) -> ConsensusReport:
        return self.flexible_detector_cls(self.profile).detect()

    @cached_property
    def single_peaked(self) -> SinglePeakedResult:
        return is_single_peaked(self.profile, self.config.single_peaked_cap)

    @cached_property
    def majority(self) -> MajorityRelation:
        return majority_relation(self.profile)

    def brute_force(self, kind: ConsensusKind) -> ConsensusReport:
        return brute_force_detect(
            self.profile, kind, self.config.enumeration_cap
        )

    def verify_stability(
        self, pivot: Optional[Preference] = None
    ) -> StabilityReport:
        """Stability checks around ``pivot``, the first flexible
        consensus pivot by default."""
        if pivot is None:
            pivot = self.flexible.pivot
        if pivot is None:
            raise PreconditionError("profile has no flexible consensus")
        rules = scoring_battery(
            self.profile.K,
            self.config.scoring_random_vectors,
            self.config.scoring_seed,
        )
        return verify_stability(self.profile, pivot, rules)

    def stability(self) -> Optional[StabilityReport]:
        if not self.flexible.found:
            return None
        return self.verify_stability()

    def document(
        self,
        source: Optional[str] = None,
        names: Optional[Dict[int, str]] = None,
    ) -> Dict[str, Any]:
        return report_document(
            self.profile,
            [self.level1, self.flexible],
            single_peaked=self.single_peaked,
            stability=self.stability(),
            source=source,
            names=names,
        )
