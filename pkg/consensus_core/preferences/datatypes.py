"""Consensus core preferences datatypes module"""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field
from functools import cached_property
from numbers import Integral
from types import MappingProxyType
from typing import Dict
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Mapping
from typing import Sequence
from typing import Tuple

from consensus_core.exceptions import ArgumentError
from consensus_core.exceptions import DimensionError
from consensus_core.types import Alternative
from consensus_core.types import Ranking
from consensus_core.util import orders_count
from consensus_core.util import pairs_count

MIN_ALTERNATIVES = 3


@dataclass(frozen=True, order=True)
class Preference:
    """Strict total order over K alternatives.

    Attributes:
        ranking
            Alternative indices from most to least preferred. Must be a
            permutation of ``0..K-1``.
    """

    ranking: Ranking

    def __post_init__(self) -> None:
        for a in self.ranking:
            if isinstance(a, bool) or not isinstance(a, Integral):
                raise ArgumentError(f"alternative {a!r} is not an integer")
        ranking = tuple(int(a) for a in self.ranking)
        object.__setattr__(self, "ranking", ranking)
        if len(ranking) < MIN_ALTERNATIVES:
            raise ArgumentError(
                f"preference needs at least {MIN_ALTERNATIVES} "
                f"alternatives, got {len(ranking)}"
            )
        if sorted(ranking) != list(range(len(ranking))):
            raise ArgumentError(
                f"ranking {ranking} is not a permutation of 0..K-1"
            )

    @classmethod
    def identity(cls, K: int) -> "Preference":
        return cls(tuple(range(K)))

    @property
    def K(self) -> int:
        return len(self.ranking)

    @property
    def best(self) -> Alternative:
        return self.ranking[0]

    @cached_property
    def positions(self) -> Tuple[int, ...]:
        """Rank position of every alternative (0 = top)."""
        positions = [0] * self.K
        for position, alternative in enumerate(self.ranking):
            positions[alternative] = position
        return tuple(positions)

    def position(self, alternative: Alternative) -> int:
        return self.positions[alternative]

    def prefers(self, a: Alternative, b: Alternative) -> bool:
        return self.positions[a] < self.positions[b]

    def reverse(self) -> "Preference":
        return Preference(self.ranking[::-1])

    def __len__(self) -> int:
        return self.K

    def __iter__(self) -> Iterator[Alternative]:
        return iter(self.ranking)

    def __str__(self) -> str:
        return " > ".join(map(str, self.ranking))


@dataclass(frozen=True, eq=True)
class Profile:
    """Multiset of preferences.

    Attributes:
        K
            Number of alternatives.
        entries
            Frequency of every stored preference. Zero-frequency
            preferences are implicit. Iterates in preference order.
    """

    K: int
    entries: Mapping[Preference, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        entries: Dict[Preference, int] = {}
        for preference, frequency in sorted(dict(self.entries).items()):
            if preference.K != self.K:
                raise DimensionError(self.K, preference.K)
            if isinstance(frequency, bool) or not isinstance(
                frequency, Integral
            ):
                raise ArgumentError(
                    f"frequency of {preference} must be an integer, "
                    f"got {frequency!r}"
                )
            if frequency < 1:
                raise ArgumentError(
                    f"frequency of {preference} must be positive, "
                    f"got {frequency}"
                )
            entries[preference] = int(frequency)
        object.__setattr__(self, "entries", MappingProxyType(entries))

    @classmethod
    def from_pairs(
        cls, K: int, pairs: Iterable[Tuple[Ranking, int]]
    ) -> "Profile":
        entries: Dict[Preference, int] = {}
        for ranking, frequency in pairs:
            preference = Preference(ranking)
            entries[preference] = entries.get(preference, 0) + frequency
        return cls(K, entries)

    @property
    def n(self) -> int:
        return sum(self.entries.values())

    @property
    def n_distinct(self) -> int:
        return len(self.entries)

    @property
    def max_frequency(self) -> int:
        return max(self.entries.values(), default=0)

    @property
    def is_empty(self) -> bool:
        return not self.entries

    @property
    def is_complete(self) -> bool:
        """Whether every one of the K! preferences is stored."""
        return self.n_distinct == orders_count(self.K)

    def frequency(self, preference: Preference) -> int:
        return self.entries.get(preference, 0)

    def preferences(self) -> List[Preference]:
        return list(self.entries)

    def sorted_by_frequency(self) -> List[Tuple[Preference, int]]:
        """Entries by descending frequency, ties in preference order."""
        return sorted(self.entries.items(), key=lambda e: (-e[1], e[0]))

    def candidates(self) -> List[Preference]:
        """Stored preferences of maximal frequency, in preference order."""
        top = self.max_frequency
        return [p for p, freq in self.entries.items() if freq == top]

    def ballots(self) -> Iterator[Preference]:
        for preference, frequency in self.entries.items():
            for _ in range(frequency):
                yield preference

    def __contains__(self, preference: object) -> bool:
        return preference in self.entries

    def __iter__(self) -> Iterator[Preference]:
        return iter(self.entries)

    def __len__(self) -> int:
        return self.n_distinct


@dataclass(frozen=True)
class MahonianTable:
    """Number of permutations of K elements by inversion count.

    Attributes:
        K
            Number of alternatives.
        counts
            ``counts[j]`` permutations have exactly ``j`` inversions,
            for ``j`` in ``0..C(K,2)``.
    """

    K: int
    counts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != pairs_count(self.K) + 1:
            raise DimensionError(
                pairs_count(self.K) + 1, len(self.counts), "counts"
            )

    @property
    def max_distance(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    def cumulative(self, distance: int) -> int:
        """Number of permutations with at most ``distance`` inversions."""
        if distance < 0:
            return 0
        return sum(self.counts[: distance + 1])

    def __getitem__(self, distance: int) -> int:
        return self.counts[distance]

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)


def common_dimension(preferences: Sequence[Preference]) -> int:
    """K shared by all preferences."""
    if not preferences:
        raise ArgumentError("at least one preference is required")
    K = preferences[0].K
    for preference in preferences:
        if preference.K != K:
            raise DimensionError(K, preference.K)
    return K
