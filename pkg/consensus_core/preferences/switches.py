"""Consensus core preferences switches module"""

from consensus_core.exceptions import ArgumentError
from consensus_core.preferences.datatypes import Preference
from consensus_core.types import Alternative


def apply_switch(p: Preference, a: Alternative, b: Alternative) -> Preference:
    """Exchange the positions of alternatives a and b in p.

    Involutive; maps preferences ranking b above a onto preferences
    ranking a above b.
    """
    for alternative in (a, b):
        if not 0 <= alternative < p.K:
            raise ArgumentError(
                f"alternative {alternative} out of range 0..{p.K - 1}"
            )
    if a == b:
        raise ArgumentError(f"cannot switch alternative {a} with itself")

    ranking = list(p.ranking)
    i, j = p.position(a), p.position(b)
    ranking[i], ranking[j] = ranking[j], ranking[i]
    return Preference(tuple(ranking))
