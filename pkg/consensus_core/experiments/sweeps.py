"""Consensus core experiments sweeps module"""

import logging
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import partial
from typing import AbstractSet
from typing import Iterable
from typing import List
from typing import Optional

from consensus_core.configurations import DEFAULT_CONFIG
from consensus_core.configurations import Config
from consensus_core.detection.detectors import detect_flexible
from consensus_core.detection.detectors import detect_level1
from consensus_core.exceptions import ArgumentError
from consensus_core.experiments.datatypes import GeneratorSpec
from consensus_core.experiments.datatypes import TrialStats
from consensus_core.experiments.generators import create_generator
from consensus_core.experiments.streams import trial_rng
from consensus_core.stability.domains import is_single_peaked
from consensus_core.stability.scoring import scoring_battery
from consensus_core.stability.verifiers import verify_stability

log = logging.getLogger(__name__)


class Check(str, Enum):
    LEVEL1 = "level1"
    FLEXIBLE = "flexible"
    SINGLE_PEAKED = "single_peaked"
    STABILITY = "stability"


ALL_CHECKS = frozenset(Check)


@dataclass(frozen=True)
class TrialOutcome:
    level1: bool = False
    flexible: bool = False
    single_peaked: bool = False
    stability_violations: int = 0
    empty: bool = False


def run_trial(
    spec: GeneratorSpec,
    master_seed: int,
    trial_index: int,
    checks: AbstractSet[Check] = ALL_CHECKS,
    config: Config = DEFAULT_CONFIG,
) -> TrialOutcome:
    generate = create_generator(spec, config.enumeration_cap)
    profile = generate(trial_rng(master_seed, trial_index))
    if profile.is_empty:
        return TrialOutcome(empty=True)

    level1 = Check.LEVEL1 in checks and detect_level1(profile).found
    flexible = detect_flexible(profile) if Check.FLEXIBLE in checks else None
    single_peaked = Check.SINGLE_PEAKED in checks and bool(
        is_single_peaked(profile, config.single_peaked_cap)
    )

    violations = 0
    if Check.STABILITY in checks and flexible is not None and flexible.found:
        rules = scoring_battery(
            profile.K, config.scoring_random_vectors, config.scoring_seed
        )
        for pivot in flexible.pivots:
            report = verify_stability(profile, pivot, rules)
            violations += len(report.violations)

    return TrialOutcome(
        level1=level1,
        flexible=flexible is not None and flexible.found,
        single_peaked=single_peaked,
        stability_violations=violations,
    )


def reduce_outcomes(
    spec: GeneratorSpec, master_seed: int, outcomes: Iterable[TrialOutcome]
) -> TrialStats:
    collected = list(outcomes)
    return TrialStats(
        spec=spec,
        trials=len(collected),
        seed=master_seed,
        level1_found=sum(o.level1 for o in collected),
        flexible_found=sum(o.flexible for o in collected),
        single_peaked=sum(o.single_peaked for o in collected),
        stability_violations=sum(
            o.stability_violations for o in collected
        ),
        empty_profiles=sum(o.empty for o in collected),
    )


def run_sweep(
    spec: GeneratorSpec,
    trials: int,
    master_seed: int,
    checks: AbstractSet[Check] = ALL_CHECKS,
    workers: int = 1,
    config: Config = DEFAULT_CONFIG,
) -> TrialStats:
    """Run ``trials`` independent trials of one grid point.

    Trial i draws from the stream keyed by (master_seed, i); results
    are reduced in trial order whatever the number of workers.
    """
    if trials < 1:
        raise ArgumentError(f"trials must be positive, got {trials}")
    if Check.LEVEL1 in checks and Check.FLEXIBLE not in checks:
        checks = checks | {Check.FLEXIBLE}
    log.info("sweeping %s over %d trials", spec.label, trials)
    run = partial(
        run_trial, spec, master_seed, checks=checks, config=config
    )
    if workers > 1:
        context = multiprocessing.get_context("spawn")
        with ProcessPoolExecutor(workers, mp_context=context) as executor:
            chunksize = max(1, trials // (4 * workers))
            outcomes = list(
                executor.map(run, range(trials), chunksize=chunksize)
            )
    else:
        outcomes = [run(index) for index in range(trials)]
    stats = reduce_outcomes(spec, master_seed, outcomes)
    if stats.stability_violations:
        log.warning(
            "%s: %d stability violations",
            spec.label,
            stats.stability_violations,
        )
    return stats


def run_grid(
    specs: Iterable[GeneratorSpec],
    trials: int,
    master_seed: int,
    checks: AbstractSet[Check] = ALL_CHECKS,
    workers: int = 1,
    config: Config = DEFAULT_CONFIG,
) -> List[TrialStats]:
    return [
        run_sweep(spec, trials, master_seed, checks, workers, config)
        for spec in specs
    ]


def default_seed(seed: Optional[int], config: Config = DEFAULT_CONFIG) -> int:
    if seed is not None:
        return seed
    if config.default_seed is not None:
        return config.default_seed
    return 0
