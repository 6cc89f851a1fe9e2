import math
from fractions import Fraction
from typing import Tuple

from leafdist.exact.counts import check_leaf_count, distribution
from leafdist.exact.quantiles import EXACT_MAX_N, LOG_MARGIN, median
from leafdist.resources.distribution import SummaryStats


def mean_distance(n: int) -> Fraction:
    """mu(d) = 4^(n-2) / C(2(n-2), n-2)."""
    check_leaf_count(n)
    return Fraction(4 ** (n - 2), math.comb(2 * (n - 2), n - 2))


def variance_distance(n: int) -> Fraction:
    """Var(d) = 4n - 6 - mu - mu^2."""
    mu = mean_distance(n)
    return 4 * n - 6 - mu - mu * mu


def moments_from_distribution(n: int) -> Tuple[Fraction, Fraction]:
    """Mean and variance computed from the counts themselves."""
    check_leaf_count(n)
    dist = distribution(n)
    total = dist.total
    first = Fraction(sum(i * c for i, c in zip(dist.distances, dist.counts)), total)
    second = Fraction(sum(i * i * c for i, c in zip(dist.distances, dist.counts)), total)
    return first, second - first * first


def summary_stats(n: int, *, exact_max_n: int = EXACT_MAX_N, log_margin: float = LOG_MARGIN) -> SummaryStats:
    return SummaryStats(
        n=n,
        mean=mean_distance(n),
        variance=variance_distance(n),
        median=median(n, exact_max_n=exact_max_n, log_margin=log_margin),
    )
