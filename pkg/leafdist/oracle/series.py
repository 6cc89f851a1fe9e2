"""Generating-function oracle for the counts: c_i = (n-2)! [x^(n-2)] B(x)^(i-1) with B(x) = 1 - sqrt(1 - 2x)."""
import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence

from leafdist.errors import DomainException, IntegrityException
from leafdist.exact.counts import check_index, check_leaf_count
from leafdist.resources.series import PowerSeries

log = logging.getLogger(__name__)


def sqrt_one_minus_2x(order: int) -> PowerSeries:
    """S(x) = sqrt(1 - 2x) from S^2 = 1 - 2x and S(0) = 1, without any binomial coefficients."""
    target = [Fraction(1), Fraction(-2)] + [Fraction(0)] * order
    s = [Fraction(1)]
    for m in range(1, order + 1):
        convolution = sum((s[j] * s[m - j] for j in range(1, m)), Fraction(0))
        s.append((target[m] - convolution) / 2)
    return PowerSeries(s, order)


@lru_cache(maxsize=32)
def b_series(order: int) -> PowerSeries:
    if not isinstance(order, int) or order < 1:
        raise DomainException(f"Series order must be at least 1, got {order!r}.")
    return 1 - sqrt_one_minus_2x(order)


def series_power(s: PowerSeries, e: int, order: int) -> PowerSeries:
    """s^e truncated after x^order, by repeated squaring."""
    if not isinstance(e, int) or e < 0:
        raise DomainException(f"Exponent must be a non-negative integer, got {e!r}.")
    if order > s.order:
        raise DomainException(f"Requested order {order} exceeds the series order {s.order}.")
    base = s.truncate(order)
    result = PowerSeries.one(order)
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


@lru_cache(maxsize=8)
def b_power_table(order: int) -> Sequence[PowerSeries]:
    """B^0, B^1, ..., B^order truncated after x^order; enough for every n <= order + 2."""
    log.debug(f"Building the table of powers of B up to order {order}.")
    b = b_series(order)
    table: List[PowerSeries] = [PowerSeries.one(order)]
    for _ in range(order):
        table.append(table[-1] * b)
    return tuple(table)


def c_via_series(n: int, i: int, *, powers: Optional[Sequence[PowerSeries]] = None) -> int:
    check_leaf_count(n)
    check_index("Distance i", i, 1, n - 1)
    degree = n - 2
    if powers is not None and len(powers) > i - 1 and powers[i - 1].order >= degree:
        series = powers[i - 1]
    else:
        series = series_power(b_series(max(degree, 1)), i - 1, degree)

    value = math.factorial(degree) * series[degree]
    if value.denominator != 1 or value < 0:
        raise IntegrityException(f"Series coefficient for n={n}, i={i} gives {value}, not a non-negative integer.")
    return value.numerator
