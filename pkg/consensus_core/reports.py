"""Consensus core reports module"""

import csv
import json
from typing import IO
from typing import Any
from typing import Dict
from typing import Iterable
from typing import List
from typing import Optional

from jsonschema import Draft7Validator

from consensus_core.detection.datatypes import ConsensusKind
from consensus_core.detection.datatypes import ConsensusReport
from consensus_core.detection.datatypes import FailureReason
from consensus_core.detection.datatypes import Outcome
from consensus_core.experiments.datatypes import TrialStats
from consensus_core.preferences.datatypes import Profile
from consensus_core.stability.datatypes import SinglePeakedResult
from consensus_core.stability.datatypes import StabilityReport

CONSENSUS_REPORT_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": [
        "kind",
        "outcome",
        "pivots",
        "failure_reason",
        "max_frequency",
        "d_hat",
    ],
    "properties": {
        "kind": {"enum": [kind.value for kind in ConsensusKind]},
        "outcome": {"enum": [outcome.value for outcome in Outcome]},
        "pivots": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}},
        },
        "failure_reason": {
            "enum": [reason.value for reason in FailureReason]
        },
        "max_frequency": {"type": "integer", "minimum": 0},
        "d_hat": {"type": ["integer", "null"], "minimum": 0},
        "pivot_names": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "string"}},
        },
    },
}

REPORT_SCHEMA: Dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["source", "K", "n", "n_distinct", "reports"],
    "properties": {
        "source": {"type": ["string", "null"]},
        "K": {"type": "integer", "minimum": 3},
        "n": {"type": "integer", "minimum": 0},
        "n_distinct": {"type": "integer", "minimum": 0},
        "reports": {"type": "array", "items": CONSENSUS_REPORT_SCHEMA},
        "single_peaked": {
            "type": "object",
            "required": ["single_peaked", "axis"],
            "properties": {
                "single_peaked": {"type": "boolean"},
                "axis": {
                    "type": ["array", "null"],
                    "items": {"type": "integer"},
                },
            },
        },
        "stability": {
            "type": "object",
            "required": ["ok", "checks", "violations"],
        },
    },
}

STATS_COLUMNS = [
    "K",
    "n_or_m",
    "phi",
    "trials",
    "level1_count",
    "flexible_count",
    "single_peaked_count",
    "level1_frac",
    "flexible_frac",
    "sp_frac",
    "level1_ci_low",
    "level1_ci_high",
    "flexible_ci_low",
    "flexible_ci_high",
    "sp_ci_low",
    "sp_ci_high",
    "seed",
]

report_validator = Draft7Validator(REPORT_SCHEMA)


def report_document(
    profile: Profile,
    reports: Iterable[ConsensusReport],
    single_peaked: Optional[SinglePeakedResult] = None,
    stability: Optional[StabilityReport] = None,
    source: Optional[str] = None,
    names: Optional[Dict[int, str]] = None,
) -> Dict[str, Any]:
    """Schema-stable JSON document describing one profile."""
    entries: List[Dict[str, Any]] = []
    for report in reports:
        entry = report.to_dict()
        if names is not None:
            entry["pivot_names"] = [
                [names.get(a, str(a + 1)) for a in pivot]
                for pivot in report.pivots
            ]
        entries.append(entry)
    document: Dict[str, Any] = {
        "source": source,
        "K": profile.K,
        "n": profile.n,
        "n_distinct": profile.n_distinct,
        "reports": entries,
    }
    if single_peaked is not None:
        axis = single_peaked.axis
        document["single_peaked"] = {
            "single_peaked": single_peaked.single_peaked,
            "axis": None if axis is None else list(axis),
        }
    if stability is not None:
        document["stability"] = {
            "ok": stability.ok,
            "checks": list(stability.checks),
            "violations": [str(v) for v in stability.violations],
        }
    report_validator.validate(document)
    return document


def write_stats_csv(stats: Iterable[TrialStats], stream: IO[str]) -> None:
    writer = csv.DictWriter(
        stream, fieldnames=STATS_COLUMNS, extrasaction="ignore"
    )
    writer.writeheader()
    for item in stats:
        writer.writerow(item.to_dict())


def stats_to_json(stats: Iterable[TrialStats]) -> str:
    return json.dumps([item.to_dict() for item in stats], indent=2)
