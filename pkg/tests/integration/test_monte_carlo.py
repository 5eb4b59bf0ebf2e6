import math

import numpy as np
import pytest

from consensus_core.experiments import GeneratorSpec
from consensus_core.experiments import flexible_lower_bound
from consensus_core.experiments import level1_upper_bound
from consensus_core.experiments import p_equal_approx
from consensus_core.experiments import p_equal_exact
from consensus_core.experiments import run_sweep

pytestmark = pytest.mark.slow

SEED = 20240917


def sigma(fraction, trials):
    return math.sqrt(fraction * (1 - fraction) / trials)


@pytest.fixture(scope="module")
def impartial_sweeps():
    return {
        m: run_sweep(GeneratorSpec.impartial(3, m), 2000, SEED)
        for m in (100, 1000, 10000)
    }


@pytest.fixture(scope="module")
def mallows_sweeps():
    return {
        phi: run_sweep(GeneratorSpec.mallows(3, 100, phi), 1000, SEED)
        for phi in (0.01, 0.05, 0.2, 1.0)
    }


class TestImpartialCulture:
    @pytest.mark.parametrize("m", [100, 1000])
    def test_flexible_fraction(self, impartial_sweeps, m):
        stats = impartial_sweeps[m]

        # floor 1/30 from the lower bound, observed near 0.045
        assert 0.030 <= stats.flexible_frac <= 0.060

    @pytest.mark.parametrize("m", [1000, 10000])
    def test_flexible_persists(self, impartial_sweeps, m):
        floor = flexible_lower_bound(3).value

        # slack for frequency ties
        assert impartial_sweeps[m].flexible_frac >= 0.8 * floor

    def test_level1_vanishes(self, impartial_sweeps):
        assert impartial_sweeps[1000].level1_frac <= 0.01

    def test_level1_below_bound(self, impartial_sweeps):
        stats = impartial_sweeps[10000]
        bound = level1_upper_bound(10000, 3).reported

        assert stats.level1_frac <= bound + 3 * sigma(bound, stats.trials)

    def test_level1_nonincreasing(self, impartial_sweeps):
        fractions = [impartial_sweeps[m].level1_frac for m in (100, 1000)]
        fractions.append(impartial_sweeps[10000].level1_frac)

        for before, after in zip(fractions, fractions[1:]):
            noise = 2 * sigma(max(before, after), 2000)
            assert after <= before + noise

    def test_no_stability_violations(self, impartial_sweeps):
        assert all(
            stats.stability_violations == 0
            for stats in impartial_sweeps.values()
        )


class TestMallows:
    def test_level1_near_reference(self, mallows_sweeps):
        assert mallows_sweeps[0.01].level1_frac > 0

    def test_level1_vanishes_at_uniform(self, mallows_sweeps):
        assert mallows_sweeps[1.0].level1_frac <= 0.01

    def test_level1_decreasing(self, mallows_sweeps):
        fractions = [mallows_sweeps[phi].level1_frac for phi in (0.01, 0.2)]

        assert fractions[1] < fractions[0]

    def test_flexible_exceeds_level1(self, mallows_sweeps):
        for stats in mallows_sweeps.values():
            assert stats.flexible_frac > stats.level1_frac, stats.spec

    def test_single_peaked_decreasing(self, mallows_sweeps):
        fractions = [stats.sp_frac for stats in mallows_sweeps.values()]

        for before, after in zip(fractions, fractions[1:]):
            noise = 2 * sigma(max(before, after), 1000)
            assert after <= before + noise

    def test_no_stability_violations(self, mallows_sweeps):
        assert all(
            stats.stability_violations == 0
            for stats in mallows_sweeps.values()
        )


class TestEqualDraws:
    M = 2000
    P = 1 / 6

    @pytest.mark.parametrize("t", [2, 3])
    def test_monte_carlo(self, t):
        rng = np.random.default_rng(SEED)
        samples, hits = 0, 0
        for _ in range(8):
            draws = rng.binomial(self.M, self.P, size=(250_000, t))
            hits += int(np.sum(np.all(draws == draws[:, :1], axis=1)))
            samples += len(draws)

        observed = hits / samples
        exact = p_equal_exact(self.M, self.P, t)

        assert abs(observed - exact) <= 4 * sigma(exact, samples)

    @pytest.mark.parametrize("t", [2, 3])
    def test_approximation_overshoot(self, t):
        ratio = p_equal_approx(self.M, self.P, t) / p_equal_exact(
            self.M, self.P, t
        )

        assert ratio == pytest.approx(math.sqrt(t), rel=0.15)

    def test_single_draw(self):
        assert p_equal_approx(self.M, self.P, 1) == 1.0
