"""Consensus core preflib exceptions module"""

from dataclasses import dataclass

from consensus_core.exceptions import ConsensusCoreError


class PreflibError(ConsensusCoreError):
    pass


@dataclass
class PreflibParseError(PreflibError):
    """Malformed PrefLib line"""

    line_number: int
    reason: str

    def __str__(self) -> str:
        return f"line {self.line_number}: {self.reason}"


@dataclass
class UnsupportedFormatError(PreflibError):
    """Well-formed PrefLib data that is not a complete strict order"""

    line_number: int
    reason: str

    def __str__(self) -> str:
        return f"line {self.line_number}: unsupported format, {self.reason}"


class PreflibHeaderWarning(UserWarning):
    """Header metadata disagrees with the ballots."""
