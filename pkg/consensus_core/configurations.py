"""Consensus core configurations module"""

import os
from dataclasses import dataclass
from dataclasses import replace
from typing import Optional
from typing import Union

from jsonschema._utils import Unset
from jsonschema.validators import _UNSET

from consensus_core.detection.types import DetectorType

SEED_ENV_VAR = "CONSENSUS_CORE_SEED"


@dataclass(frozen=True)
class Config:
    """Consensus core configuration dataclass.

    Attributes:
        mahonian_cap
            Largest K for which Mahonian tables are built.
        enumeration_cap
            Largest K for which all K! preferences are enumerated
            (brute-force oracles, impartial culture, exact Mallows law).
        bound_cap
            Largest K for which the flexible lower bound is evaluated
            with exact factorials.
        single_peaked_cap
            Largest K accepted by single-peakedness recognition.
        level1_detector_cls
            Level-1 consensus detector class.
        flexible_detector_cls
            Flexible consensus detector class.
        scoring_random_vectors
            Number of random nonincreasing vectors in the scoring battery.
        scoring_seed
            Seed of the random part of the scoring battery.
        default_seed
            Master seed used by simulations when none is given.
    """

    mahonian_cap: int = 20
    enumeration_cap: int = 8
    bound_cap: int = 8
    single_peaked_cap: int = 300

    level1_detector_cls: Union[DetectorType, Unset] = _UNSET
    flexible_detector_cls: Union[DetectorType, Unset] = _UNSET

    scoring_random_vectors: int = 5
    scoring_seed: int = 0

    default_seed: Optional[int] = None

    @classmethod
    def from_env(cls, **overrides: object) -> "Config":
        config = cls()
        value = os.environ.get(SEED_ENV_VAR)
        if value:
            config = replace(config, default_seed=int(value))
        return replace(config, **overrides)  # type: ignore[arg-type]


DEFAULT_CONFIG = Config()
