"""Consensus core experiments bounds module"""

import math
from fractions import Fraction
from typing import Optional

import numpy as np
from scipy.stats import binom

from consensus_core.exceptions import ArgumentError
from consensus_core.experiments.datatypes import LowerBound
from consensus_core.experiments.datatypes import UpperBound
from consensus_core.preferences.datatypes import MIN_ALTERNATIVES
from consensus_core.preferences.mahonian import mahonian_table
from consensus_core.util import check_cap
from consensus_core.util import orders_count
from consensus_core.util import pairs_count

DEFAULT_BOUND_CAP = 8


def _check_p_equal_domain(m: int, p: float, t: int) -> None:
    if m < 1:
        raise ArgumentError(f"m must be at least 1, got {m}")
    if not 0.0 < p < 0.5:
        raise ArgumentError(f"p must be in (0, 1/2), got {p}")
    if t < 1:
        raise ArgumentError(f"t must be at least 1, got {t}")


def p_equal_approx(m: int, p: float, t: int) -> float:
    """Approximate probability that t independent Binomial(m, p) draws
    are all equal: (2 pi p (1 - p) m) ** ((1 - t) / 2).

    Exact for t = 1. For t >= 2 it overestimates the true value by a
    factor tending to sqrt(t) as m grows.
    """
    _check_p_equal_domain(m, p, t)
    return float((2 * math.pi * p * (1 - p) * m) ** ((1 - t) / 2))


def p_equal_exact(m: int, p: float, t: int) -> float:
    """Sum over i of Pr[Binomial(m, p) = i] ** t."""
    _check_p_equal_domain(m, p, t)
    pmf = binom.pmf(np.arange(m + 1), m, p)
    return float(np.sum(pmf**t))


def level1_upper_bound(m: int, K: int) -> UpperBound:
    """K! / (2 pi m / K!) ** ((K! - C(K, 2) - 1) / 2), evaluated in log
    space."""
    if m < 1:
        raise ArgumentError(f"m must be at least 1, got {m}")
    if K < MIN_ALTERNATIVES:
        raise ArgumentError(
            f"K must be at least {MIN_ALTERNATIVES}, got {K}"
        )
    exponent = orders_count(K) - pairs_count(K) - 1
    log_orders = math.lgamma(K + 1)
    log_ratio = math.log(2 * math.pi * m) - log_orders
    try:
        half = exponent / 2
    except OverflowError:
        half = math.inf
    log_raw = log_orders - half * log_ratio if log_ratio else log_orders
    try:
        raw = math.exp(log_raw)
    except OverflowError:
        raw = math.inf
    return UpperBound(K, m, exponent, log_raw, raw, min(raw, 1.0))


def flexible_lower_bound(K: int, cap: Optional[int] = None) -> LowerBound:
    """Product of T(K, d)! for d >= 1 over (K! - 1)!, exactly."""
    check_cap(
        "flexible_lower_bound",
        K,
        DEFAULT_BOUND_CAP if cap is None else cap,
    )
    counts = mahonian_table(K).counts[1:]
    numerator = math.prod(math.factorial(count) for count in counts)
    exact = Fraction(numerator, math.factorial(orders_count(K) - 1))
    log10 = (
        sum(math.lgamma(count + 1) for count in counts)
        - math.lgamma(orders_count(K))
    ) / math.log(10)
    return LowerBound(K, exact, float(exact), log10)
