import warnings
from textwrap import dedent

import pytest

from consensus_core.preferences import Preference
from consensus_core.preflib import PreflibHeaderWarning
from consensus_core.preflib import PreflibParseError
from consensus_core.preflib import UnsupportedFormatError
from consensus_core.preflib import parse_preflib
from consensus_core.preflib import read_preflib


def soc(body, *headers):
    lines = [
        "# FILE NAME: 00000-00000001.soc",
        "# DATA TYPE: soc",
        "# NUMBER ALTERNATIVES: 3",
        "# ALTERNATIVE NAME 1: Alpha",
        "# ALTERNATIVE NAME 2: Beta",
        "# ALTERNATIVE NAME 3: Gamma",
    ]
    lines.extend(headers)
    return "\n".join(lines) + "\n" + dedent(body)


class TestParsePreflib:
    def test_strict_orders(self):
        text = soc(
            """\
            3: 1,2,3
            2: 2,1,3
            """
        )

        document = parse_preflib(text)

        assert document.K == 3
        assert document.n == 5
        assert document.ballots == ((3, (0, 1, 2)), (2, (1, 0, 2)))
        assert document.alternative_names == {
            0: "Alpha",
            1: "Beta",
            2: "Gamma",
        }
        assert document.header("DATA TYPE") == "soc"

    def test_profile(self):
        text = soc(
            """\
            3: 1,2,3
            2: 1,2,3
            1: 3,2,1
            """
        )

        profile = parse_preflib(text).to_profile()

        assert profile.frequency(Preference((0, 1, 2))) == 5
        assert profile.frequency(Preference((2, 1, 0))) == 1
        assert profile.n_distinct == 2

    def test_names(self):
        document = parse_preflib(soc("1: 3,1,2\n"))

        assert document.names(Preference((2, 0, 1))) == [
            "Gamma",
            "Alpha",
            "Beta",
        ]

    def test_blank_lines(self):
        document = parse_preflib(soc("\n1: 1,2,3\n\n1: 3,2,1\n"))

        assert document.n == 2

    def test_bare_header(self):
        document = parse_preflib(soc("1: 1,2,3\n", "# TITLE:"))

        assert document.header("TITLE") == ""

    def test_dimension_from_ballots(self):
        document = parse_preflib("4: 2,3,1,4\n")

        assert document.K == 4
        assert document.name(3) == "4"

    def test_matching_counts(self):
        text = soc(
            "2: 1,2,3\n1: 2,3,1\n",
            "# NUMBER VOTERS: 3",
            "# NUMBER UNIQUE ORDERS: 2",
        )

        with warnings.catch_warnings():
            warnings.simplefilter("error")
            parse_preflib(text)

    @pytest.mark.parametrize(
        "header",
        ["# NUMBER VOTERS: 4", "# NUMBER UNIQUE ORDERS: 1"],
    )
    def test_count_mismatch(self, header):
        with pytest.warns(PreflibHeaderWarning):
            document = parse_preflib(soc("2: 1,2,3\n1: 2,3,1\n", header))

        assert document.n == 3

    @pytest.mark.parametrize(
        "body,line_number",
        [
            ("x: 1,2,3\n", 7),
            ("0: 1,2,3\n", 7),
            ("1: 1,2,4\n", 7),
            ("1: 1,1,2\n", 7),
            ("1: 1,2,3\n1 1,2,3\n", 8),
            ("1: 1,two,3\n", 7),
            ("1: 1,2,3\n# LATE: header\n", 8),
            ("²: 1,2,3\n", 7),
            ("1: 1,²,3\n", 7),
            ("٣: 1,2,3\n", 7),
        ],
    )
    def test_malformed(self, body, line_number):
        with pytest.raises(PreflibParseError) as exc_info:
            parse_preflib(soc(body))

        assert exc_info.value.line_number == line_number
        assert str(exc_info.value).startswith(f"line {line_number}: ")

    def test_malformed_header(self):
        with pytest.raises(PreflibParseError):
            parse_preflib("# no separator\n1: 1,2,3\n")

    def test_empty(self):
        with pytest.raises(PreflibParseError):
            parse_preflib("")

    @pytest.mark.parametrize(
        "body",
        ["1: 1,{2,3}\n", "2: 1,2\n"],
    )
    def test_not_strict_complete(self, body):
        with pytest.raises(UnsupportedFormatError):
            parse_preflib(soc(body))

    def test_other_data_type(self):
        text = "# DATA TYPE: toc\n# NUMBER ALTERNATIVES: 3\n1: 1,2,3\n"

        with pytest.raises(UnsupportedFormatError) as exc_info:
            parse_preflib(text)

        assert exc_info.value.line_number == 1

    def test_non_ascii_alternative_count(self):
        with pytest.raises(PreflibParseError) as exc_info:
            parse_preflib("# NUMBER ALTERNATIVES: ³\n1: 1,2,3\n")

        assert exc_info.value.line_number == 1

    def test_too_few_alternatives(self):
        with pytest.raises(UnsupportedFormatError):
            parse_preflib("# NUMBER ALTERNATIVES: 2\n1: 1,2\n")


class TestReadPreflib:
    def test_path(self, tmp_path):
        path = tmp_path / "election.soc"
        path.write_text(soc("4: 1,2,3\n"), encoding="utf-8")

        document = read_preflib(path)

        assert document.n == 4

    def test_missing(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            read_preflib(tmp_path / "missing.soc")
