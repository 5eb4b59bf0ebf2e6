"""Consensus core experiments datatypes module"""

import math
from dataclasses import dataclass
from dataclasses import field
from enum import Enum
from fractions import Fraction
from typing import Any
from typing import Dict
from typing import Optional
from typing import Tuple

from scipy.stats import binomtest

from consensus_core.exceptions import ArgumentError
from consensus_core.exceptions import DimensionError
from consensus_core.preferences.datatypes import MIN_ALTERNATIVES
from consensus_core.preferences.datatypes import Preference


def _check_K(K: int) -> None:
    if K < MIN_ALTERNATIVES:
        raise ArgumentError(
            f"K must be at least {MIN_ALTERNATIVES}, got {K}"
        )


@dataclass(frozen=True)
class MallowsParams:
    """Mallows distribution: Pr[p] proportional to phi ** d(p, reference).

    Attributes:
        K
            Number of alternatives.
        phi
            Dispersion in (0, 1]. 1 is the uniform distribution.
        reference
            Central order, identity by default.
    """

    K: int
    phi: float
    reference: Optional[Preference] = None

    def __post_init__(self) -> None:
        _check_K(self.K)
        if not 0.0 < self.phi <= 1.0:
            raise ArgumentError(f"phi must be in (0, 1], got {self.phi}")
        if self.reference is None:
            object.__setattr__(self, "reference", Preference.identity(self.K))
        elif self.reference.K != self.K:
            raise DimensionError(self.K, self.reference.K)

    @property
    def center(self) -> Preference:
        assert self.reference is not None
        return self.reference


@dataclass(frozen=True)
class ImpartialParams:
    """Every preference gets Binomial(m, 1/K!) voters.

    Attributes:
        K
            Number of alternatives.
        m
            Expected number of voters.
    """

    K: int
    m: int

    def __post_init__(self) -> None:
        _check_K(self.K)
        if self.m < 1:
            raise ArgumentError(f"m must be at least 1, got {self.m}")


class Model(str, Enum):
    MALLOWS = "mallows"
    IMPARTIAL = "impartial"
    REFERENCE = "reference"


@dataclass(frozen=True)
class GeneratorSpec:
    """Profile generator of a sweep grid point.

    Attributes:
        model
            Culture the profiles are drawn from.
        K
            Number of alternatives.
        size
            Voter count n for Mallows, expected voters m for the
            impartial process.
        phi
            Mallows dispersion. 0 selects the reference generator.
    """

    model: Model
    K: int
    size: int
    phi: Optional[float] = None

    @classmethod
    def mallows(cls, K: int, n: int, phi: float) -> "GeneratorSpec":
        if phi == 0:
            return cls(Model.REFERENCE, K, n, 0.0)
        MallowsParams(K, phi)
        return cls(Model.MALLOWS, K, n, phi)

    @classmethod
    def impartial(cls, K: int, m: int) -> "GeneratorSpec":
        ImpartialParams(K, m)
        return cls(Model.IMPARTIAL, K, m)

    @property
    def label(self) -> str:
        if self.phi is None:
            return f"{self.model.value}(K={self.K}, m={self.size})"
        return (
            f"{self.model.value}(K={self.K}, n={self.size}, phi={self.phi})"
        )


@dataclass(frozen=True)
class TrialStats:
    """Aggregated outcomes of one sweep grid point."""

    spec: GeneratorSpec
    trials: int
    seed: int
    level1_found: int = 0
    flexible_found: int = 0
    single_peaked: int = 0
    stability_violations: int = 0
    empty_profiles: int = 0
    confidence_level: float = field(default=0.95, compare=False)

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ArgumentError(f"trials must be positive, got {self.trials}")
        for name in ("level1_found", "flexible_found", "single_peaked"):
            if not 0 <= getattr(self, name) <= self.trials:
                raise ArgumentError(f"{name} outside 0..{self.trials}")
        if self.level1_found > self.flexible_found:
            raise ArgumentError(
                "level-1 consensus found more often than flexible consensus"
            )

    @property
    def level1_frac(self) -> float:
        return self.level1_found / self.trials

    @property
    def flexible_frac(self) -> float:
        return self.flexible_found / self.trials

    @property
    def sp_frac(self) -> float:
        return self.single_peaked / self.trials

    def interval(self, count: int) -> Tuple[float, float]:
        """Wilson interval of ``count / trials``."""
        ci = binomtest(count, self.trials).proportion_ci(
            confidence_level=self.confidence_level, method="wilson"
        )
        return float(ci.low), float(ci.high)

    def sigma(self, count: int) -> float:
        """Normal-approximation standard error of ``count / trials``."""
        p = count / self.trials
        return math.sqrt(p * (1 - p) / self.trials)

    def to_dict(self) -> Dict[str, Any]:
        level1 = self.interval(self.level1_found)
        flexible = self.interval(self.flexible_found)
        sp = self.interval(self.single_peaked)
        return {
            "model": self.spec.model.value,
            "K": self.spec.K,
            "n_or_m": self.spec.size,
            "phi": self.spec.phi,
            "trials": self.trials,
            "level1_count": self.level1_found,
            "flexible_count": self.flexible_found,
            "single_peaked_count": self.single_peaked,
            "level1_frac": self.level1_frac,
            "flexible_frac": self.flexible_frac,
            "sp_frac": self.sp_frac,
            "level1_ci_low": level1[0],
            "level1_ci_high": level1[1],
            "flexible_ci_low": flexible[0],
            "flexible_ci_high": flexible[1],
            "sp_ci_low": sp[0],
            "sp_ci_high": sp[1],
            "stability_violations": self.stability_violations,
            "empty_profiles": self.empty_profiles,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class UpperBound:
    """Closed-form upper bound on the level-1 consensus probability.

    ``raw`` may exceed 1 for small m; ``reported`` is clamped.
    """

    K: int
    m: int
    exponent: int
    log_raw: float
    raw: float
    reported: float


@dataclass(frozen=True)
class LowerBound:
    """Lower bound on the flexible consensus probability as an exact
    ratio."""

    K: int
    exact: Fraction
    value: float
    log10: float
