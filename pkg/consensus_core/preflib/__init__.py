"""Consensus core preflib module"""

from consensus_core.preflib.datatypes import PreflibDocument
from consensus_core.preflib.exceptions import PreflibError
from consensus_core.preflib.exceptions import PreflibHeaderWarning
from consensus_core.preflib.exceptions import PreflibParseError
from consensus_core.preflib.exceptions import UnsupportedFormatError
from consensus_core.preflib.parsers import parse_preflib
from consensus_core.preflib.parsers import read_preflib
from consensus_core.preflib.serializers import serialize_preflib

__all__ = [
    "PreflibDocument",
    "PreflibError",
    "PreflibHeaderWarning",
    "PreflibParseError",
    "UnsupportedFormatError",
    "parse_preflib",
    "read_preflib",
    "serialize_preflib",
]
