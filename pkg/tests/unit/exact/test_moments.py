import math
from fractions import Fraction

import pytest

from leafdist.errors import DomainException
from leafdist.exact.counts import distribution
from leafdist.exact.moments import mean_distance, moments_from_distribution, summary_stats, variance_distance


@pytest.mark.parametrize(
    "n, mean, variance",
    [(3, Fraction(2), Fraction(0)), (4, Fraction(8, 3), Fraction(2, 9)), (5, Fraction(16, 5), Fraction(14, 25))],
)
def test_moments_small_n(n: int, mean: Fraction, variance: Fraction):
    assert mean_distance(n) == mean
    assert variance_distance(n) == variance
    assert moments_from_distribution(n) == (mean, variance)


def test_mean_five_from_counts():
    dist = distribution(5)
    assert Fraction(sum(i * c for i, c in zip(dist.distances, dist.counts)), dist.total) == Fraction(48, 15)


def test_closed_forms_match_counts():
    for n in range(3, 301):
        mean, variance = moments_from_distribution(n)
        assert mean_distance(n) == mean, f"n={n}"
        assert variance_distance(n) == variance, f"n={n}"
        assert variance >= 0


def test_mean_grows_like_sqrt_pi_n():
    assert 0.99 < float(mean_distance(1000)) / math.sqrt(1000 * math.pi) < 1.01


def test_summary_stats():
    stats = summary_stats(4)
    assert (stats.n, stats.mean, stats.variance, stats.median) == (4, Fraction(8, 3), Fraction(2, 9), 2)
    assert stats.as_dict() == {"n": "4", "mean": "8/3", "variance": "2/9", "median": "2"}


@pytest.mark.parametrize("function", [mean_distance, variance_distance, moments_from_distribution, summary_stats])
def test_moments_reject_small_n(function):
    with pytest.raises(DomainException):
        function(2)
