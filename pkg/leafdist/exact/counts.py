"""Exact counts of trees: |T_n| and the number of trees c_i with d(1, 2) = i, plus the cumulative fractions."""
import logging
import math
from fractions import Fraction
from functools import lru_cache

from leafdist.errors import DomainException, IntegrityException
from leafdist.resources.distribution import DistanceDistribution

log = logging.getLogger(__name__)


def check_leaf_count(n: int, minimum: int = 3) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainException(f"Leaf count must be an integer, got {n!r}.")
    if n < minimum:
        raise DomainException(f"Leaf count must be at least {minimum}, got {n}.")


def check_index(name: str, value: int, low: int, high: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or not low <= value <= high:
        raise DomainException(f"{name} must be an integer in [{low}, {high}], got {value!r}.")


def double_factorial(m: int) -> int:
    """m!! for m >= -1, with (-1)!! = 0!! = 1."""
    if m < -1:
        raise DomainException(f"Double factorial is undefined for {m}.")
    return math.prod(range(m, 0, -2))


def falling_factorial_ratio(top: int, bottom: int) -> int:
    """top! / bottom! for top >= bottom >= 0, as a product of bottom + 1..top."""
    if not 0 <= bottom <= top:
        raise DomainException(f"{top}!/{bottom}! is not a non-negative integer ratio.")
    return math.prod(range(bottom + 1, top + 1))


def tree_count(n: int) -> int:
    """|T_n|: 1 for n in {1, 2} and (2n - 5)!! otherwise."""
    check_leaf_count(n, minimum=1)
    if n <= 2:
        return 1
    return double_factorial(2 * n - 5)


def distance_count(n: int, i: int) -> int:
    """c_i = (i - 1)(2n - i - 4)! / (2(n - i - 1))!! for i <= n - 2 and (n - 2)! for i = n - 1."""
    check_leaf_count(n)
    check_index("Distance i", i, 1, n - 1)
    if i == n - 1:
        return math.factorial(n - 2)

    m = n - i - 1
    numerator = (i - 1) * math.factorial(2 * n - i - 4)
    # (2m)!! = 2^m m!
    denominator = (1 << m) * math.factorial(m)
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise IntegrityException(f"c_{i} for n={n} is not integral: {numerator}/{denominator}.")
    return quotient


@lru_cache(maxsize=512)
def distribution(n: int) -> DistanceDistribution:
    check_leaf_count(n)
    return DistanceDistribution(n, [distance_count(n, i) for i in range(1, n)])


def cumulative_fraction(n: int, k: int) -> Fraction:
    """P(d <= k) through the closed form 1 - 2^k (n-3)! (2n-4-k)! / (2 (2n-5)! (n-2-k)!).

    At k = n - 1 the closed form contains (-1)!; its reciprocal is taken as 0 so the result is exactly 1.
    """
    check_leaf_count(n)
    check_index("k", k, 1, n - 1)
    if k == n - 1:
        return Fraction(1)
    tail = Fraction(
        2 ** k * math.factorial(n - 3) * math.factorial(2 * n - 4 - k),
        2 * math.factorial(2 * n - 5) * math.factorial(n - 2 - k),
    )
    return 1 - tail


def cumulative_fraction_direct(n: int, k: int) -> Fraction:
    """P(d <= k) as the literal partial sum of the counts over |T_n|."""
    check_leaf_count(n)
    check_index("k", k, 1, n - 1)
    return Fraction(sum(distribution(n).counts[:k]), tree_count(n))
