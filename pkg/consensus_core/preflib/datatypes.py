"""Consensus core preflib datatypes module"""

from dataclasses import dataclass
from dataclasses import field
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

from consensus_core.preferences.datatypes import Preference
from consensus_core.preferences.datatypes import Profile
from consensus_core.types import Alternative
from consensus_core.types import Ranking

Ballot = Tuple[int, Ranking]


@dataclass(frozen=True)
class PreflibDocument:
    """Strict-order PrefLib election.

    Attributes:
        K
            Number of alternatives.
        metadata
            Header entries in file order, alternative names included.
        alternative_names
            Display name of every 0-based alternative index.
        ballots
            ``(count, ranking)`` lines in file order, 0-based rankings.
    """

    K: int
    metadata: Tuple[Tuple[str, str], ...] = ()
    alternative_names: Dict[Alternative, str] = field(default_factory=dict)
    ballots: Tuple[Ballot, ...] = ()

    def header(self, key: str) -> Optional[str]:
        for name, value in self.metadata:
            if name == key:
                return value
        return None

    @property
    def n(self) -> int:
        return sum(count for count, _ in self.ballots)

    def name(self, alternative: Alternative) -> str:
        return self.alternative_names.get(alternative, str(alternative + 1))

    def names(self, preference: Preference) -> List[str]:
        return [self.name(alternative) for alternative in preference]

    def to_profile(self) -> Profile:
        return Profile.from_pairs(
            self.K, ((ranking, count) for count, ranking in self.ballots)
        )
