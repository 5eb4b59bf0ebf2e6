from unittest import mock

import pytest

from consensus_core import Config
from consensus_core import ConsensusKind
from consensus_core import Preference
from consensus_core import ProfileAnalyzer
from consensus_core.detection import FailureReason
from consensus_core.detection import FlexibleConsensusDetector
from consensus_core.detection import Level1ConsensusDetector
from consensus_core.exceptions import PreconditionError
from consensus_core.reports import report_validator


class TestProfileAnalyzerInit:
    def test_type_check(self):
        with pytest.raises(TypeError):
            ProfileAnalyzer({(0, 1, 2): 3})

    def test_default_config(self, unanimous_profile):
        analyzer = ProfileAnalyzer(unanimous_profile)

        assert analyzer.config == Config()


class TestProfileAnalyzerFromBallots:
    def test_counts(self, profile_factory):
        ballots = [
            profile_factory.preference(0, 1, 2),
            profile_factory.preference(1, 0, 2),
            profile_factory.preference(0, 1, 2),
        ]

        analyzer = ProfileAnalyzer.from_ballots(ballots)

        assert analyzer.profile.n == 3
        assert analyzer.profile.frequency(Preference((0, 1, 2))) == 2


class TestProfileAnalyzerFromPath:
    def test_soc(self, tmp_path):
        path = tmp_path / "tiny.soc"
        path.write_text(
            "# DATA TYPE: soc\n# NUMBER ALTERNATIVES: 3\n4: 2,1,3\n",
            encoding="utf-8",
        )

        analyzer = ProfileAnalyzer.from_path(path)

        assert analyzer.level1.pivot == Preference((1, 0, 2))


class TestProfileAnalyzerDetectors:
    def test_defaults(self, unanimous_profile):
        analyzer = ProfileAnalyzer(unanimous_profile)

        assert analyzer.level1_detector_cls is Level1ConsensusDetector
        assert analyzer.flexible_detector_cls is FlexibleConsensusDetector

    def test_custom(self, unanimous_profile):
        class CustomDetector(FlexibleConsensusDetector):
            pass

        config = Config(flexible_detector_cls=CustomDetector)

        analyzer = ProfileAnalyzer(unanimous_profile, config=config)

        assert analyzer.flexible_detector_cls is CustomDetector
        assert analyzer.flexible.found

    def test_cached(self, unanimous_profile):
        analyzer = ProfileAnalyzer(unanimous_profile)

        assert analyzer.flexible is analyzer.flexible

    def test_flexible_only(self, unequal_neighbours_profile):
        analyzer = ProfileAnalyzer(unequal_neighbours_profile)

        assert not analyzer.level1.found
        assert analyzer.flexible.found
        assert analyzer.flexible.pivot == Preference((0, 1, 2))

    @pytest.mark.parametrize("kind", list(ConsensusKind))
    def test_brute_force_agrees(self, graded_profile, kind):
        analyzer = ProfileAnalyzer(graded_profile)
        fast = {
            ConsensusKind.LEVEL1: analyzer.level1,
            ConsensusKind.FLEXIBLE: analyzer.flexible,
        }[kind]

        assert analyzer.brute_force(kind).pivots == fast.pivots


class TestProfileAnalyzerStability:
    def test_default_pivot(self, flexible_only_profile):
        analyzer = ProfileAnalyzer(flexible_only_profile)

        report = analyzer.verify_stability()

        assert report.pivot == Preference((0, 1, 2))
        assert report.ok

    def test_no_consensus(self, cycle_profile):
        analyzer = ProfileAnalyzer(cycle_profile)

        assert analyzer.stability() is None
        with pytest.raises(PreconditionError):
            analyzer.verify_stability()

    def test_config_battery(self, unanimous_profile):
        config = Config(scoring_random_vectors=0)
        analyzer = ProfileAnalyzer(unanimous_profile, config=config)

        report = analyzer.verify_stability()

        random_checks = [name for name in report.checks if "random" in name]
        assert random_checks == []

    @mock.patch("consensus_core.app.verify_stability")
    def test_uses_config_rules(self, verify_mock, unanimous_profile):
        config = Config(scoring_random_vectors=2, scoring_seed=4)
        analyzer = ProfileAnalyzer(unanimous_profile, config=config)

        analyzer.verify_stability()

        (profile, pivot, rules), _ = verify_mock.call_args
        assert profile is unanimous_profile
        assert pivot == Preference((0, 1, 2))
        assert sum(rule.name.startswith("random") for rule in rules) == 2


class TestProfileAnalyzerDocument:
    def test_found(self, unanimous_profile):
        document = ProfileAnalyzer(unanimous_profile).document(
            source="unanimous.soc", names={0: "a", 1: "b", 2: "c"}
        )

        report_validator.validate(document)
        assert document["source"] == "unanimous.soc"
        assert [r["kind"] for r in document["reports"]] == [
            "level1",
            "flexible",
        ]
        assert document["reports"][0]["pivot_names"] == [["a", "b", "c"]]
        assert document["stability"]["ok"] is True
        assert document["single_peaked"]["single_peaked"] is True

    def test_not_found(self, cycle_profile):
        document = ProfileAnalyzer(cycle_profile).document()

        assert "stability" not in document
        assert document["reports"][0]["failure_reason"] == (
            FailureReason.CONDITION1_VIOLATED.value
        )
        assert document["reports"][1]["pivots"] == []
