"""Consensus core preflib serializers module"""

from consensus_core.preflib.datatypes import PreflibDocument


def serialize_preflib(document: PreflibDocument) -> str:
    """Canonical SOC text: headers in order, then ``count: a,b,c``."""
    lines = [
        f"# {key}: {value}" if value else f"# {key}:"
        for key, value in document.metadata
    ]
    lines.extend(
        f"{count}: {','.join(str(a + 1) for a in ranking)}"
        for count, ranking in document.ballots
    )
    return "\n".join(lines) + "\n"
