"""Consensus core preflib parsers module"""

import logging
import warnings
from pathlib import Path
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple
from typing import Union

from more_itertools import peekable
from parse import Parser

from consensus_core.preferences.datatypes import MIN_ALTERNATIVES
from consensus_core.preflib.datatypes import Ballot
from consensus_core.preflib.datatypes import PreflibDocument
from consensus_core.preflib.exceptions import PreflibHeaderWarning
from consensus_core.preflib.exceptions import PreflibParseError
from consensus_core.preflib.exceptions import UnsupportedFormatError

log = logging.getLogger(__name__)

HEADER = Parser("# {key}: {value}")
BARE_HEADER = Parser("# {key}:")
ALTERNATIVE_NAME = Parser("ALTERNATIVE NAME {index:d}")
BALLOT = Parser("{count}:{ranking}")

DATA_TYPE = "DATA TYPE"
NUMBER_ALTERNATIVES = "NUMBER ALTERNATIVES"
NUMBER_VOTERS = "NUMBER VOTERS"
NUMBER_UNIQUE_ORDERS = "NUMBER UNIQUE ORDERS"
STRICT_COMPLETE = "soc"


class PreflibParser:
    """Strict parser for PrefLib strict-complete-order (SOC) files."""

    def __init__(self, text: str):
        self.text = text

    def parse(self) -> PreflibDocument:
        lines = peekable(enumerate(self.text.splitlines(), start=1))
        metadata: List[Tuple[str, str]] = []
        names: Dict[int, str] = {}
        declared: Optional[int] = None
        while lines and lines.peek()[1].startswith("#"):
            number, line = next(lines)
            key, value = self._header(number, line)
            metadata.append((key, value))
            declared = self._apply_header(
                number, key, value, names, declared
            )

        raw: List[Tuple[int, int, List[str]]] = []
        for number, line in lines:
            if not line.strip():
                continue
            if line.startswith("#"):
                raise PreflibParseError(number, "header after ballots")
            raw.append(self._ballot(number, line))

        K = self._dimension(declared, names, raw)
        ballots = tuple(
            self._ranking(number, count, labels, K)
            for number, count, labels in raw
        )
        document = PreflibDocument(K, tuple(metadata), names, ballots)
        self._check_counts(document)
        log.debug(
            "parsed %d ballot lines over %d alternatives", len(ballots), K
        )
        return document

    def _header(self, number: int, line: str) -> Tuple[str, str]:
        result = HEADER.parse(line)
        if result is not None:
            return result["key"], result["value"]
        result = BARE_HEADER.parse(line)
        if result is not None:
            return result["key"], ""
        raise PreflibParseError(number, f"malformed header {line!r}")

    def _apply_header(
        self,
        number: int,
        key: str,
        value: str,
        names: Dict[int, str],
        declared: Optional[int],
    ) -> Optional[int]:
        if key == DATA_TYPE and value.strip().lower() != STRICT_COMPLETE:
            raise UnsupportedFormatError(
                number, f"data type {value.strip()!r} is not soc"
            )
        if key == NUMBER_ALTERNATIVES:
            return self._integer(number, value, key)
        named = ALTERNATIVE_NAME.parse(key)
        if named is not None:
            names[named["index"] - 1] = value
        return declared

    def _ballot(self, number: int, line: str) -> Tuple[int, int, List[str]]:
        result = BALLOT.parse(line)
        if result is None:
            raise PreflibParseError(number, f"malformed ballot {line!r}")
        count = self._integer(number, result["count"], "count")
        if count < 1:
            raise PreflibParseError(number, f"count {count} is not positive")
        ranking = result["ranking"]
        if "{" in ranking or "}" in ranking:
            raise UnsupportedFormatError(number, "ranking contains ties")
        return number, count, [label.strip() for label in ranking.split(",")]

    def _ranking(
        self, number: int, count: int, labels: List[str], K: int
    ) -> Ballot:
        ranking: List[int] = []
        for label in labels:
            index = self._integer(number, label, "alternative") - 1
            if not 0 <= index < K:
                raise PreflibParseError(
                    number, f"alternative {label} outside 1..{K}"
                )
            ranking.append(index)
        if len(set(ranking)) != len(ranking):
            raise PreflibParseError(number, "alternative listed twice")
        if len(ranking) != K:
            raise UnsupportedFormatError(
                number, f"ranking lists {len(ranking)} of {K} alternatives"
            )
        return count, tuple(ranking)

    def _dimension(
        self,
        declared: Optional[int],
        names: Dict[int, str],
        raw: List[Tuple[int, int, List[str]]],
    ) -> int:
        if declared is not None:
            K = declared
        elif names:
            K = len(names)
        elif raw:
            K = len(raw[0][2])
        else:
            raise PreflibParseError(1, "no alternatives declared")
        if K < MIN_ALTERNATIVES:
            raise UnsupportedFormatError(
                1, f"{K} alternatives, at least {MIN_ALTERNATIVES} required"
            )
        return K

    def _check_counts(self, document: PreflibDocument) -> None:
        for key, actual in (
            (NUMBER_VOTERS, document.n),
            (NUMBER_UNIQUE_ORDERS, len(document.to_profile())),
        ):
            value = document.header(key)
            if value is None:
                continue
            if value.strip() != str(actual):
                warnings.warn(
                    f"{key} header says {value.strip()}, ballots give "
                    f"{actual}",
                    PreflibHeaderWarning,
                )

    @staticmethod
    def _integer(number: int, text: str, what: str) -> int:
        text = text.strip()
        if not (text.isascii() and text.isdigit()):
            raise PreflibParseError(number, f"{what} {text!r} is not a number")
        return int(text)


def parse_preflib(text: str) -> PreflibDocument:
    return PreflibParser(text).parse()


def read_preflib(path: Union[str, Path]) -> PreflibDocument:
    return parse_preflib(Path(path).read_text(encoding="utf-8"))
