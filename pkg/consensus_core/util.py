"""Consensus core util module"""

from math import comb
from math import factorial
from typing import Optional

from consensus_core.exceptions import CapacityError


def pairs_count(K: int) -> int:
    return comb(K, 2)


def orders_count(K: int) -> int:
    return factorial(K)


def check_cap(what: str, K: int, cap: Optional[int]) -> None:
    if cap is not None and K > cap:
        raise CapacityError(what, K, cap)
