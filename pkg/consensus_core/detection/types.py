from typing import TYPE_CHECKING
from typing import Type

if TYPE_CHECKING:
    from consensus_core.detection.detectors import BaseConsensusDetector

DetectorType = Type["BaseConsensusDetector"]
