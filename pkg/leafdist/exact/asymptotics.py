"""Float approximations of the median, percentiles and mean for large n."""
import math
from fractions import Fraction
from typing import Union

from leafdist.errors import DomainException
from leafdist.exact.counts import check_leaf_count

LN2 = math.log(2)
REFINED_OFFSET = 0.5 - LN2


def median_asymptotic(n: int, refined: bool = False) -> float:
    """sqrt(4 ln2 n), plus the constant 1/2 - ln 2 when refined."""
    check_leaf_count(n)
    plain = math.sqrt(4 * LN2 * n)
    return plain + REFINED_OFFSET if refined else plain


def _log_survival(p) -> float:
    """ln(1 - p), with the complement taken exactly for rational p."""
    if isinstance(p, bool) or not isinstance(p, (int, float, Fraction)):
        try:
            p = float(p)
        except (TypeError, ValueError):
            raise DomainException(f"Percentile threshold must be a number, got {p!r}.")
    if not 0 < p < 1:
        raise DomainException(f"Percentile threshold must lie strictly between 0 and 1, got {p}.")
    if isinstance(p, float) or p <= Fraction(1, 2):
        return math.log1p(-float(p))
    q = 1 - Fraction(p)
    # float(q) underflows for p within 1e-308 of 1
    return math.log(q.numerator) - math.log(q.denominator)


def percentile_asymptotic(n: int, p: Union[float, Fraction], refined: bool = False) -> float:
    """sqrt(-4 ln(1 - p) n), plus the constant 1/2 + ln(1 - p) when refined.

    At p = 1/2 both variants coincide with `median_asymptotic`.
    """
    check_leaf_count(n)
    log_survival = _log_survival(p)
    plain = math.sqrt(-4 * log_survival * n)
    return plain + 0.5 + log_survival if refined else plain


def mean_asymptotic(n: int) -> float:
    check_leaf_count(n)
    return math.sqrt(math.pi * n)
