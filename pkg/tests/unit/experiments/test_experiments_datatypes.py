import pytest

from consensus_core.exceptions import ArgumentError
from consensus_core.exceptions import DimensionError
from consensus_core.experiments import GeneratorSpec
from consensus_core.experiments import MallowsParams
from consensus_core.experiments import Model
from consensus_core.experiments import TrialStats
from consensus_core.preferences import Preference


class TestMallowsParams:
    def test_reference_dimension(self):
        with pytest.raises(DimensionError):
            MallowsParams(4, 0.5, Preference((0, 1, 2)))

    def test_small_K(self):
        with pytest.raises(ArgumentError):
            MallowsParams(2, 0.5)


class TestGeneratorSpec:
    def test_mallows_label(self):
        spec = GeneratorSpec.mallows(3, 10, 0.5)

        assert spec.model == Model.MALLOWS
        assert spec.label == "mallows(K=3, n=10, phi=0.5)"

    def test_impartial_label(self):
        spec = GeneratorSpec.impartial(4, 100)

        assert spec.phi is None
        assert spec.label == "impartial(K=4, m=100)"


class TestTrialStats:
    @pytest.fixture
    def spec(self):
        return GeneratorSpec.mallows(3, 10, 0.5)

    def test_fractions(self, spec):
        stats = TrialStats(spec, 200, 0, 20, 50, 100)

        assert stats.level1_frac == 0.1
        assert stats.flexible_frac == 0.25
        assert stats.sp_frac == 0.5

    def test_interval_contains_estimate(self, spec):
        stats = TrialStats(spec, 200, 0, 20, 50, 100)

        low, high = stats.interval(stats.flexible_found)

        assert low < stats.flexible_frac < high
        assert 0 <= low and high <= 1

    def test_interval_zero_count(self, spec):
        stats = TrialStats(spec, 100, 0)

        low, high = stats.interval(0)

        assert low == pytest.approx(0.0, abs=1e-12)
        assert 0 < high < 0.05

    def test_sigma(self, spec):
        stats = TrialStats(spec, 100, 0, 0, 50)

        assert stats.sigma(50) == pytest.approx(0.05)

    def test_to_dict(self, spec):
        stats = TrialStats(spec, 10, 4, 1, 3, 10)

        row = stats.to_dict()

        assert row["K"] == 3
        assert row["n_or_m"] == 10
        assert row["phi"] == 0.5
        assert row["flexible_count"] == 3
        assert row["sp_frac"] == 1.0
        assert row["seed"] == 4
        assert row["level1_ci_low"] <= 0.1 <= row["level1_ci_high"]

    def test_level1_bounded_by_flexible(self, spec):
        with pytest.raises(ArgumentError):
            TrialStats(spec, 10, 0, level1_found=3, flexible_found=2)

    @pytest.mark.parametrize("trials", [0, -1])
    def test_trials(self, spec, trials):
        with pytest.raises(ArgumentError):
            TrialStats(spec, trials, 0)

    def test_counts_in_range(self, spec):
        with pytest.raises(ArgumentError):
            TrialStats(spec, 10, 0, single_peaked=11)
