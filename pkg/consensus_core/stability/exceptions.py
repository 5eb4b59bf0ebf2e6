"""Consensus core stability exceptions module"""

from dataclasses import dataclass
from typing import TYPE_CHECKING
from typing import Sequence

from consensus_core.exceptions import ConsensusCoreError

if TYPE_CHECKING:
    from consensus_core.stability.datatypes import Violation


@dataclass
class StabilityViolation(ConsensusCoreError):
    """Stability property failed around a consensus pivot"""

    violations: Sequence["Violation"]

    def __str__(self) -> str:
        details = "; ".join(map(str, self.violations))
        return f"Stability violated ({len(self.violations)}): {details}"
