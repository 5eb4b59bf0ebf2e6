"""Consensus core stability datatypes module"""

from dataclasses import dataclass
from dataclasses import field
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from consensus_core.exceptions import ArgumentError
from consensus_core.preferences.datatypes import Preference
from consensus_core.stability.exceptions import StabilityViolation
from consensus_core.types import Alternative


@dataclass(frozen=True)
class MajorityRelation:
    """Pairwise weak majority relation of a profile.

    Attributes:
        K
            Number of alternatives.
        support
            ``support[a][b]`` voters rank a above b.
    """

    K: int
    support: Tuple[Tuple[int, ...], ...]

    def beats(self, a: Alternative, b: Alternative) -> bool:
        """Whether a beats b by a weak majority (a tie counts)."""
        if a == b:
            return False
        return self.support[a][b] >= self.support[b][a]

    def strictly_beats(self, a: Alternative, b: Alternative) -> bool:
        return a != b and self.support[a][b] > self.support[b][a]

    @property
    def matrix(self) -> List[List[bool]]:
        alternatives = range(self.K)
        return [[self.beats(a, b) for b in alternatives] for a in alternatives]

    def copeland_scores(self) -> List[int]:
        """Number of strict pairwise wins per alternative."""
        return [
            sum(self.strictly_beats(a, b) for b in range(self.K))
            for a in range(self.K)
        ]

    def strict_order(self) -> Optional[Preference]:
        """Order induced by strict majority, if it is a transitive
        tournament."""
        scores = self.copeland_scores()
        if sorted(scores) != list(range(self.K)):
            return None
        ranking = sorted(range(self.K), key=lambda a: -scores[a])
        return Preference(tuple(ranking))


@dataclass(frozen=True)
class ScoringRule:
    """Positional scoring rule.

    Attributes:
        scores
            Points for each rank position, nonincreasing.
        name
            Label used in reports.
    """

    scores: Tuple[int, ...]
    name: str = "custom"

    def __post_init__(self) -> None:
        object.__setattr__(self, "scores", tuple(self.scores))
        if not self.scores:
            raise ArgumentError("scoring vector cannot be empty")
        if any(x < y for x, y in zip(self.scores, self.scores[1:])):
            raise ArgumentError(
                f"scoring vector {self.scores} is not nonincreasing"
            )

    @property
    def K(self) -> int:
        return len(self.scores)

    @classmethod
    def plurality(cls, K: int) -> "ScoringRule":
        return cls((1,) + (0,) * (K - 1), "plurality")

    @classmethod
    def borda(cls, K: int) -> "ScoringRule":
        return cls(tuple(range(K - 1, -1, -1)), "borda")

    @classmethod
    def veto(cls, K: int) -> "ScoringRule":
        return cls((1,) * (K - 1) + (0,), "veto")

    @classmethod
    def step(cls, K: int, cut: int) -> "ScoringRule":
        """One point for each of the top ``cut`` positions."""
        if not 1 <= cut < K:
            raise ArgumentError(f"cut must be in 1..{K - 1}, got {cut}")
        return cls((1,) * cut + (0,) * (K - cut), f"step-{cut}")


@dataclass(frozen=True)
class Violation:
    check: str
    detail: str

    def __str__(self) -> str:
        return f"{self.check}: {self.detail}"


@dataclass
class StabilityReport:
    """Outcome of the stability checks around a pivot."""

    pivot: Preference
    n: int
    checks: List[str] = field(default_factory=list)
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, check: str, detail: str) -> None:
        self.violations.append(Violation(check, detail))

    def raise_for_violations(self) -> None:
        if self.violations:
            raise StabilityViolation(self.violations)


@dataclass(frozen=True)
class SinglePeakedResult:
    """Single-peakedness verdict with the axis that witnesses it."""

    axis: Optional[Tuple[Alternative, ...]] = None

    @property
    def single_peaked(self) -> bool:
        return self.axis is not None

    def __bool__(self) -> bool:
        return self.single_peaked


def is_single_peaked_on(
    ranking: Sequence[Alternative], axis: Sequence[Alternative]
) -> bool:
    """Whether every top segment of ``ranking`` is an axis interval."""
    where = {alternative: index for index, alternative in enumerate(axis)}
    lo = hi = where[ranking[0]]
    for alternative in ranking[1:]:
        index = where[alternative]
        if index == lo - 1:
            lo = index
        elif index == hi + 1:
            hi = index
        else:
            return False
    return True
