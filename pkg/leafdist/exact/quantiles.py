"""Median and percentiles of d.

Both are the largest k whose cumulative count does not exceed p * |T_n|. With the tail term
T(k) = 1 - P(d <= k) this is the largest k with T(k) >= 1 - p. T(1) = 1, T(n - 1) = 0 and T is strictly decreasing
in between (T(k + 1) / T(k) = 2(n - 2 - k) / (2n - 4 - k)), so the answer is found by binary search.
"""
import logging
import math
import numbers
import sys
from fractions import Fraction
from typing import Callable

from leafdist.errors import DomainException
from leafdist.exact.counts import check_index, check_leaf_count, distribution, tree_count

log = logging.getLogger(__name__)

EXACT_MAX_N = 10_000
LOG_MARGIN = 1e-9
# lgamma values carry a relative error of a few ulps; comparisons closer than this are re-done exactly
FLOAT_SLACK = 64 * sys.float_info.epsilon

HALF = Fraction(1, 2)


def check_probability(p) -> Fraction:
    if isinstance(p, float) or not isinstance(p, numbers.Rational):
        raise DomainException(f"Percentile threshold must be an exact rational like 9/10, got {p!r}.")
    p = Fraction(p)
    if not 0 < p < 1:
        raise DomainException(f"Percentile threshold must lie strictly between 0 and 1, got {p}.")
    return p


def _tail_parts(n: int, k: int):
    # T(k) = 2^(k-1) * prod_{j=n-1-k}^{n-3} j / prod_{j=2n-3-k}^{2n-5} j
    # the numerator picks up the factor 0 at k = n - 1, which is the 1/(-1)! = 0 convention
    numerator = (1 << (k - 1)) * math.prod(range(n - 1 - k, n - 2))
    denominator = math.prod(range(2 * n - 3 - k, 2 * n - 4))
    return numerator, denominator


def tail_term(n: int, k: int) -> Fraction:
    """1 - P(d <= k), exactly."""
    check_leaf_count(n)
    check_index("k", k, 1, n - 1)
    return Fraction(*_tail_parts(n, k))


def _tail_at_least(n: int, k: int, q: Fraction) -> bool:
    numerator, denominator = _tail_parts(n, k)
    return numerator * q.denominator >= q.numerator * denominator


def _log_tail_terms(n: int, k: int):
    return (
        k * math.log(2),
        math.lgamma(n - 2),
        math.lgamma(2 * n - 3 - k),
        -math.log(2),
        -math.lgamma(2 * n - 4),
        -math.lgamma(n - 1 - k),
    )


def log_tail_term(n: int, k: int) -> float:
    """ln T(k) in double precision; -inf at k = n - 1."""
    check_leaf_count(n)
    check_index("k", k, 1, n - 1)
    if k == n - 1:
        return -math.inf
    return math.fsum(_log_tail_terms(n, k))


def median_inequality_holds(n: int, k: int) -> bool:
    """2^k (n-3)! (2n-4-k)! >= (2n-5)! (n-2-k)!, the defining inequality of the median."""
    check_leaf_count(n)
    check_index("k", k, 1, n - 1)
    if k == n - 1:
        return False
    left = 2 ** k * math.factorial(n - 3) * math.factorial(2 * n - 4 - k)
    right = math.factorial(2 * n - 5) * math.factorial(n - 2 - k)
    return left >= right


def _largest_satisfying(low: int, high: int, predicate: Callable[[int], bool]) -> int:
    # predicate(low) holds and predicate is monotone (true, ..., true, false, ...)
    while low < high:
        mid = (low + high + 1) // 2
        if predicate(mid):
            low = mid
        else:
            high = mid - 1
    return low


def _log(value: Fraction) -> float:
    return math.log(value.numerator) - math.log(value.denominator)


def _log_space_percentile(n: int, q: Fraction, log_margin: float) -> int:
    log_q = _log(q)
    exact_checks = 0

    def predicate(k: int) -> bool:
        nonlocal exact_checks
        terms = _log_tail_terms(n, k)
        value = math.fsum(terms)
        tolerance = max(log_margin * max(1.0, abs(log_q)), FLOAT_SLACK * sum(abs(t) for t in terms))
        if abs(value - log_q) <= tolerance:
            exact_checks += 1
            return _tail_at_least(n, k, q)
        return value >= log_q

    # T(n - 1) = 0 < q, so the search never needs to look past n - 2
    result = _largest_satisfying(1, n - 2, predicate)
    log.debug(f"Log-space solver for n={n}, q={q}: k={result} with {exact_checks} exact confirmation(s).")
    return result


def percentile(n: int, p, *, exact_max_n: int = EXACT_MAX_N, log_margin: float = LOG_MARGIN) -> int:
    """x_p = max{k : c_1 + ... + c_k <= p |T_n|}.

    Up to `exact_max_n` leaves every comparison is done on cross-multiplied integers; above it the search runs on
    the log-gamma form of the tail term and only comparisons within the margin are settled exactly.
    """
    check_leaf_count(n)
    p = check_probability(p)
    q = 1 - p
    if n <= exact_max_n:
        return _largest_satisfying(1, n - 1, lambda k: _tail_at_least(n, k, q))
    return _log_space_percentile(n, q, log_margin)


def median(n: int, *, exact_max_n: int = EXACT_MAX_N, log_margin: float = LOG_MARGIN) -> int:
    return percentile(n, HALF, exact_max_n=exact_max_n, log_margin=log_margin)


def quantile_scan(n: int, p) -> int:
    """Percentile by a linear scan over the cumulative counts, compared as integers."""
    check_leaf_count(n)
    p = check_probability(p)
    threshold_numerator = p.numerator * tree_count(n)
    result = 0
    for k, cumulative in enumerate(distribution(n).cumulative_counts(), start=1):
        if cumulative * p.denominator <= threshold_numerator:
            result = k
        else:
            break
    return result
