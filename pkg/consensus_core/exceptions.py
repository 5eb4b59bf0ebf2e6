"""Consensus core exceptions module"""

from dataclasses import dataclass


class ConsensusCoreError(Exception):
    pass


@dataclass
class DimensionError(ConsensusCoreError):
    """Operands defined over different numbers of alternatives"""

    expected: int
    actual: int
    what: str = "alternatives"

    def __str__(self) -> str:
        return (
            f"Dimension mismatch: expected {self.expected} {self.what}, "
            f"got {self.actual}"
        )


@dataclass
class ArgumentError(ConsensusCoreError, ValueError):
    """Invalid argument value"""

    message: str

    def __str__(self) -> str:
        return self.message


@dataclass
class CapacityError(ConsensusCoreError):
    """Requested size exceeds a configured cap"""

    what: str
    K: int
    cap: int

    def __str__(self) -> str:
        return f"{self.what} supports K <= {self.cap}, got K={self.K}"


@dataclass
class PreconditionError(ConsensusCoreError):
    """Operation called outside of its precondition"""

    message: str

    def __str__(self) -> str:
        return self.message
