"""Consensus core detection datatypes module"""

from dataclasses import dataclass
from dataclasses import field
from enum import Enum
from typing import Any
from typing import Dict
from typing import List
from typing import NamedTuple
from typing import Optional

from consensus_core.preferences.datatypes import Preference


class ConsensusKind(str, Enum):
    LEVEL1 = "level1"
    FLEXIBLE = "flexible"


class Outcome(str, Enum):
    FOUND = "found"
    NOT_FOUND = "not_found"


class FailureReason(str, Enum):
    CONDITION2_VIOLATED = "condition2_violated"
    CONDITION1_VIOLATED = "condition1_violated_all_candidates"
    FLEXIBLE_CONDITION1_VIOLATED = (
        "flexible_condition1_violated_all_candidates"
    )
    NONE = "none"


class RankedRecord(NamedTuple):
    """Stored preference ranked around a candidate."""

    frequency: int
    distance: int
    preference: Preference

    @property
    def sort_key(self) -> Any:
        return (-self.frequency, self.distance, self.preference)


@dataclass(frozen=True)
class ConsensusReport:
    """Outcome of a consensus detection.

    Attributes:
        kind
            Consensus notion that was checked.
        outcome
            Whether a pivot was found.
        pivots
            Maximal-frequency preferences around which the property
            holds, in preference order. Empty iff not found.
        failure_reason
            Why no pivot was found, ``NONE`` otherwise.
        max_frequency
            Frequency of the candidate class.
        d_hat
            Largest distance from a stored preference to the first pivot.
    """

    kind: ConsensusKind
    outcome: Outcome
    pivots: List[Preference] = field(default_factory=list)
    failure_reason: FailureReason = FailureReason.NONE
    max_frequency: int = 0
    d_hat: Optional[int] = None

    def __post_init__(self) -> None:
        if self.found != bool(self.pivots):
            raise ValueError("pivots must be non-empty iff found")
        if self.found and self.failure_reason != FailureReason.NONE:
            raise ValueError("found report cannot carry a failure reason")

    @property
    def found(self) -> bool:
        return self.outcome == Outcome.FOUND

    @property
    def pivot(self) -> Optional[Preference]:
        return self.pivots[0] if self.pivots else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "outcome": self.outcome.value,
            "pivots": [list(p.ranking) for p in self.pivots],
            "failure_reason": self.failure_reason.value,
            "max_frequency": self.max_frequency,
            "d_hat": self.d_hat,
        }
