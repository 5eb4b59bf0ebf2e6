"""Consensus core preferences mahonian module"""

from functools import lru_cache
from typing import List
from typing import Optional
from typing import Tuple

from consensus_core.exceptions import ArgumentError
from consensus_core.preferences.datatypes import MIN_ALTERNATIVES
from consensus_core.preferences.datatypes import MahonianTable
from consensus_core.util import check_cap
from consensus_core.util import pairs_count

DEFAULT_MAHONIAN_CAP = 20

# cumulative counts grow fast; probing this far first settles almost
# every closure test for large K without building long rows
CLOSURE_PROBE = 64


@lru_cache(maxsize=512)
def mahonian_prefix(K: int, upto: int) -> Tuple[int, ...]:
    """T(K, j) for j in ``0..upto`` (zero past C(K, 2))."""
    row: List[int] = [1] + [0] * upto
    for size in range(2, K + 1):
        # T(size, j) = sum of T(size - 1, j - i) for i in 0..size-1
        prefix: List[int] = []
        acc = 0
        for value in row:
            acc += value
            prefix.append(acc)
        row = [
            prefix[j] - (prefix[j - size] if j >= size else 0)
            for j in range(upto + 1)
        ]
    return tuple(row)


def mahonian_cumulative(K: int, distance: int) -> int:
    """Number of preferences within ``distance`` of a fixed one."""
    if distance < 0:
        return 0
    return sum(mahonian_prefix(K, min(distance, pairs_count(K))))


def closure_holds(K: int, distance: int, stored: int) -> bool:
    """Whether exactly ``stored`` preferences lie within ``distance``."""
    probe = min(distance, CLOSURE_PROBE)
    if mahonian_cumulative(K, probe) > stored:
        return False
    return mahonian_cumulative(K, distance) == stored


def mahonian_table(K: int, cap: Optional[int] = None) -> MahonianTable:
    """Counts T(K, j) of permutations with exactly j inversions."""
    if K < MIN_ALTERNATIVES:
        raise ArgumentError(
            f"K must be at least {MIN_ALTERNATIVES}, got {K}"
        )
    check_cap(
        "mahonian_table",
        K,
        DEFAULT_MAHONIAN_CAP if cap is None else cap,
    )
    return MahonianTable(K, mahonian_prefix(K, pairs_count(K)))
