"""Uniform random trees and Monte Carlo estimates of the distance distribution.

Random numbers come from numpy's counter-based Philox bit generator, so a seed reproduces the same codes on every
platform.
"""
import logging
import math
from fractions import Fraction
from itertools import accumulate
from typing import Iterator, List, Sequence

import numpy as np

from leafdist.errors import DomainException
from leafdist.exact.counts import check_leaf_count, distribution
from leafdist.resources.tree import PhyloTree
from leafdist.trees.tree import decode

log = logging.getLogger(__name__)

MAX_SEED = 2 ** 64 - 1
DEFAULT_BATCH_SIZE = 50_000


def make_rng(seed: int) -> np.random.Generator:
    if not isinstance(seed, (int, np.integer)) or not 0 <= seed <= MAX_SEED:
        raise DomainException(f"Seed must be an unsigned 64-bit integer, got {seed!r}.")
    return np.random.Generator(np.random.Philox(int(seed)))


def draw_codes(n: int, samples: int, rng: np.random.Generator) -> np.ndarray:
    """A (samples, n - 3) array whose column for leaf k is uniform on [1, 2k - 5]."""
    check_leaf_count(n)
    if samples < 1:
        raise DomainException(f"Number of samples must be positive, got {samples}.")
    if n == 3:
        return np.zeros((samples, 0), dtype=np.int64)
    highs = 2 * np.arange(4, n + 1, dtype=np.int64) - 5
    return rng.integers(1, highs, size=(samples, n - 3), endpoint=True, dtype=np.int64)


def sample_uniform(n: int, seed: int) -> PhyloTree:
    """A tree drawn uniformly from T_n; the same seed always gives the same tree."""
    rng = make_rng(seed)
    return decode(n, draw_codes(n, 1, rng)[0].tolist())


def path_lengths(n: int, codes: np.ndarray) -> np.ndarray:
    """d(1, 2) of the decoded trees, without building them.

    Follows the creation order of `decode`: an edge on the 1-2 path stays on it when subdivided, so the new edge
    (w, v) inherits the flag of the chosen edge and the pendant edge of the new leaf is never on the path.
    """
    size = codes.shape[0]
    on_path = np.zeros((size, 2 * n - 3), dtype=bool)
    on_path[:, 0] = True
    on_path[:, 1] = True
    rows = np.arange(size)
    for column, k in enumerate(range(4, n + 1)):
        on_path[:, 2 * k - 5] = on_path[rows, codes[:, column] - 1]
    return on_path.sum(axis=1)


def iter_code_batches(
    n: int, samples: int, seed: int, *, batch_size: int = DEFAULT_BATCH_SIZE
) -> Iterator[np.ndarray]:
    """Insertion codes of `samples` uniform trees, drawn from one seeded stream in batches of at most `batch_size`."""
    check_leaf_count(n)
    if samples < 1:
        raise DomainException(f"Number of samples must be positive, got {samples}.")
    if batch_size < 1:
        raise DomainException(f"Batch size must be positive, got {batch_size}.")
    rng = make_rng(seed)
    remaining = samples
    while remaining:
        size = min(batch_size, remaining)
        yield draw_codes(n, size, rng)
        remaining -= size


def iter_sampled_trees(
    n: int, samples: int, seed: int, *, batch_size: int = DEFAULT_BATCH_SIZE
) -> Iterator[PhyloTree]:
    """The trees counted by `monte_carlo_distribution` for the same arguments, in draw order."""
    for codes in iter_code_batches(n, samples, seed, batch_size=batch_size):
        for code in codes.tolist():
            yield decode(n, code)


def monte_carlo_distribution(n: int, samples: int, seed: int, *, batch_size: int = DEFAULT_BATCH_SIZE) -> List[int]:
    """Histogram of d(1, 2) over `samples` uniform trees; entry i - 1 counts distance i."""
    histogram = np.zeros(n, dtype=np.int64)
    for codes in iter_code_batches(n, samples, seed, batch_size=batch_size):
        histogram += np.bincount(path_lengths(n, codes), minlength=n)
    log.debug(f"Sampled {samples} trees with n={n} and seed={seed}.")
    return [int(count) for count in histogram[1:]]


def kolmogorov_distance(histogram: Sequence[int], n: int) -> Fraction:
    """Exact sup-distance between the empirical CDF of a histogram and the exact CDF of d."""
    if len(histogram) != n - 1:
        raise DomainException(f"Histogram for n={n} must have {n - 1} entries, got {len(histogram)}.")
    samples = sum(histogram)
    if samples < 1:
        raise DomainException("Histogram is empty.")
    exact = distribution(n).cdf()
    return max(abs(Fraction(cumulative, samples) - f) for cumulative, f in zip(accumulate(histogram), exact))


def dkw_bound(samples: int, alpha: float) -> float:
    """Sup-distance exceeded with probability at most alpha (Dvoretzky-Kiefer-Wolfowitz)."""
    if not 0 < alpha < 1:
        raise DomainException(f"Confidence level alpha must lie in (0, 1), got {alpha}.")
    return math.sqrt(math.log(2 / alpha) / (2 * samples))
