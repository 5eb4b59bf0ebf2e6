import pytest

from consensus_core.detection import detect_flexible
from consensus_core.exceptions import PreconditionError
from consensus_core.preferences import Preference
from consensus_core.preferences import Profile
from consensus_core.stability import ScoringRule
from consensus_core.stability import StabilityViolation
from consensus_core.stability import Violation
from consensus_core.stability import verify_stability
from consensus_core.stability.datatypes import StabilityReport

IDENTITY = Preference((0, 1, 2))


class TestVerifyStability:
    def test_unanimous(self, unanimous_profile):
        report = verify_stability(unanimous_profile, IDENTITY)

        assert report.ok
        assert "majority_agrees" in report.checks
        assert "odd_unique_pivot" in report.checks
        assert "scoring:borda" in report.checks

    def test_odd_flexible(self, flexible_only_profile):
        report = verify_stability(flexible_only_profile, IDENTITY)

        assert report.ok
        assert report.n == 13

    def test_even_with_second_pivot(self):
        # 0 and 1 tie; switching them yields the other pivot
        profile = Profile.from_pairs(3, [((0, 1, 2), 2), ((1, 0, 2), 2)])

        report = verify_stability(profile, IDENTITY)

        assert report.ok
        assert "even_witness" in report.checks
        assert detect_flexible(profile).pivots == [
            IDENTITY,
            Preference((1, 0, 2)),
        ]

    def test_uniform(self, uniform_profile):
        for pivot in uniform_profile:
            assert verify_stability(uniform_profile, pivot).ok

    def test_precondition(self, inverted_profile):
        with pytest.raises(PreconditionError):
            verify_stability(inverted_profile, IDENTITY)

    def test_custom_rules(self, unanimous_profile):
        rules = [ScoringRule((5, 5, 1), "flat-top")]

        report = verify_stability(unanimous_profile, IDENTITY, rules)

        assert report.checks[-1] == "scoring:flat-top"

    def test_random_profiles(self, profile_factory, rng):
        for K in (3, 4):
            for _ in range(300):
                profile = profile_factory.random(rng, K, 25, 8)
                for pivot in detect_flexible(profile).pivots:
                    report = verify_stability(profile, pivot)
                    assert report.ok, report.violations


class TestStabilityReport:
    def test_raise_for_violations(self):
        report = StabilityReport(IDENTITY, 3)
        report.add("majority_agrees", "1 strictly beats 0")

        with pytest.raises(StabilityViolation) as exc_info:
            report.raise_for_violations()

        assert exc_info.value.violations == [
            Violation("majority_agrees", "1 strictly beats 0")
        ]
        assert "majority_agrees: 1 strictly beats 0" in str(exc_info.value)

    def test_ok(self):
        report = StabilityReport(IDENTITY, 3)

        report.raise_for_violations()

        assert report.ok
