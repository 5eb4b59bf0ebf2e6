"""Consensus core preferences distances module"""

from itertools import combinations
from typing import List
from typing import Sequence
from typing import Tuple

from consensus_core.exceptions import DimensionError
from consensus_core.preferences.datatypes import Preference


def count_inversions(sequence: Sequence[int]) -> int:
    """Number of pairs ``i < j`` with ``sequence[i] > sequence[j]``.

    Bottom-up merge sort, O(K log K).
    """
    items: List[int] = list(sequence)
    size = len(items)
    buffer: List[int] = [0] * size
    inversions = 0
    width = 1
    while width < size:
        for lo in range(0, size, 2 * width):
            mid = min(lo + width, size)
            hi = min(lo + 2 * width, size)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if items[i] <= items[j]:
                    buffer[k] = items[i]
                    i += 1
                else:
                    buffer[k] = items[j]
                    # every element left in the run is greater
                    inversions += mid - i
                    j += 1
                k += 1
            buffer[k:hi] = items[i:mid] if i < mid else items[j:hi]
        items, buffer = buffer, items
        width *= 2
    return inversions


def _relative(p: Preference, q: Preference) -> Tuple[int, ...]:
    if p.K != q.K:
        raise DimensionError(p.K, q.K)
    positions = q.positions
    return tuple(positions[alternative] for alternative in p.ranking)


def inversion_distance(p: Preference, q: Preference) -> int:
    """Number of alternative pairs ranked differently by p and q."""
    return count_inversions(_relative(p, q))


def pair_scan_distance(p: Preference, q: Preference) -> int:
    """Reference O(K^2) inversion distance."""
    if p.K != q.K:
        raise DimensionError(p.K, q.K)
    return sum(
        1
        for a, b in combinations(range(p.K), 2)
        if p.prefers(a, b) != q.prefers(a, b)
    )
