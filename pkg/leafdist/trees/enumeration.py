import itertools
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterator, List, Sequence, Tuple, TypeVar

from leafdist.errors import DomainException, EnumerationTooLargeException
from leafdist.exact.counts import check_leaf_count
from leafdist.resources.distribution import DistanceDistribution
from leafdist.resources.tree import InsertionCode, PhyloTree
from leafdist.trees.tree import decode, leaf_distance

log = logging.getLogger(__name__)

DEFAULT_MAX_LEAVES = 10

Visitor = Callable[[PhyloTree], None]
V = TypeVar("V", bound=Visitor)


def check_enumerable(n: int, max_leaves: int = DEFAULT_MAX_LEAVES) -> None:
    check_leaf_count(n)
    if n > max_leaves:
        raise EnumerationTooLargeException(n, max_leaves)


def iter_codes(n: int, prefix: Sequence[int] = ()) -> Iterator[InsertionCode]:
    """All insertion codes for n leaves that start with `prefix`, in lexicographic order."""
    prefix = tuple(prefix)
    if len(prefix) > n - 3:
        raise DomainException(f"Prefix {prefix} is longer than a code for {n} leaves.")
    ranges = [range(1, 2 * k - 4) for k in range(4 + len(prefix), n + 1)]
    for tail in itertools.product(*ranges):
        yield InsertionCode(prefix + tail)


def enumerate_trees(
    n: int, visitor: Visitor, *, max_leaves: int = DEFAULT_MAX_LEAVES, prefix: Sequence[int] = ()
) -> int:
    """Call `visitor` once for every tree in T_n (or in the part of it fixed by `prefix`) and return the count."""
    check_enumerable(n, max_leaves)
    count = 0
    for code in iter_codes(n, prefix):
        visitor(decode(n, code))
        count += 1
    return count


def partition_prefixes(n: int, min_partitions: int) -> List[Tuple[int, ...]]:
    """Split the code space by fixing e_4, e_5, ... until there are at least `min_partitions` parts."""
    prefixes: List[Tuple[int, ...]] = [()]
    k = 4
    while len(prefixes) < min_partitions and k <= n:
        prefixes = [prefix + (choice,) for prefix in prefixes for choice in range(1, 2 * k - 4)]
        k += 1
    return prefixes


def enumerate_partitioned(
    n: int, visitor_factory: Callable[[], V], *, workers: int = 1, max_leaves: int = DEFAULT_MAX_LEAVES
) -> List[Tuple[V, int]]:
    """Enumerate T_n in independent partitions, each with its own visitor; returns (visitor, count) per partition."""
    check_enumerable(n, max_leaves)
    workers = max(1, workers)
    prefixes = partition_prefixes(n, workers)
    log.debug(f"Enumerating n={n} in {len(prefixes)} partition(s) on {workers} worker(s).")

    def run(prefix: Tuple[int, ...]) -> Tuple[V, int]:
        visitor = visitor_factory()
        return visitor, enumerate_trees(n, visitor, max_leaves=max_leaves, prefix=prefix)

    if workers == 1:
        return [run(prefix) for prefix in prefixes]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(run, prefixes))


class DistanceVisitor:
    """Histogram of d(k, l) over the visited trees."""

    def __init__(self, k: int = 1, l: int = 2):  # noqa: E741
        self.k = k
        self.l = l
        self.histogram = Counter()

    def __call__(self, tree: PhyloTree) -> None:
        self.histogram[leaf_distance(tree, self.k, self.l)] += 1


def pair_distance_distribution(
    n: int, k: int, l: int, *, workers: int = 1, max_leaves: int = DEFAULT_MAX_LEAVES  # noqa: E741
) -> DistanceDistribution:
    """Exact counts of d(k, l) over the full enumeration of T_n."""
    results = enumerate_partitioned(n, lambda: DistanceVisitor(k, l), workers=workers, max_leaves=max_leaves)
    histogram = Counter()
    for visitor, _ in results:
        histogram.update(visitor.histogram)
    return DistanceDistribution(n, [histogram[i] for i in range(1, n)])


def empirical_distribution(
    n: int, *, workers: int = 1, max_leaves: int = DEFAULT_MAX_LEAVES
) -> DistanceDistribution:
    """Brute-force counts of d(1, 2) over every tree with n leaves."""
    return pair_distance_distribution(n, 1, 2, workers=workers, max_leaves=max_leaves)
