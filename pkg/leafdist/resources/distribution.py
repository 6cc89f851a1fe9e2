from fractions import Fraction
from itertools import accumulate
from typing import Dict, List, Sequence, Tuple

from leafdist.helpers import format_ratio
from leafdist.resources.resource import Resource


class DistanceDistribution(Resource):
    """Exact counts c_1..c_{n-1} of trees with d(1, 2) = i, for trees with n leaves."""

    def __init__(self, n: int, counts: Sequence[int]):
        self.n = n
        self.counts: Tuple[int, ...] = tuple(counts)
        assert len(self.counts) == n - 1, f"Expected {n - 1} counts for n={n}, got {len(self.counts)}"

    def count(self, i: int) -> int:
        return self.counts[i - 1]

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def distances(self) -> range:
        return range(1, self.n)

    def cumulative_counts(self) -> List[int]:
        return list(accumulate(self.counts))

    def probabilities(self) -> List[Fraction]:
        total = self.total
        return [Fraction(c, total) for c in self.counts]

    def cdf(self) -> List[Fraction]:
        total = self.total
        return [Fraction(c, total) for c in self.cumulative_counts()]

    def rows(self) -> List[Dict[str, str]]:
        return [
            {"i": str(i), "c_i": str(c), "probability": format_ratio(p)}
            for i, c, p in zip(self.distances, self.counts, self.probabilities())
        ]

    def as_dict(self):
        return {"n": self.n, "counts": [str(c) for c in self.counts]}

    def __eq__(self, other):
        if not isinstance(other, DistanceDistribution):
            return NotImplemented
        return self.n == other.n and self.counts == other.counts

    def __hash__(self):
        return hash((self.n, self.counts))

    def __repr__(self):
        return f"<DistanceDistribution[n:{self.n}, counts:{list(self.counts)}]>"


class SummaryStats(Resource):
    def __init__(self, n: int, mean: Fraction, variance: Fraction, median: int):
        self.n = n
        self.mean = mean
        self.variance = variance
        self.median = median

    def as_dict(self):
        return {
            "n": str(self.n),
            "mean": format_ratio(self.mean),
            "variance": format_ratio(self.variance),
            "median": str(self.median),
        }

    def __repr__(self):
        return f"<SummaryStats[n:{self.n}, mean:{self.mean}, variance:{self.variance}, median:{self.median}]>"
