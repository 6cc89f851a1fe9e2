import logging
import math
from fractions import Fraction
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

import pendulum

from leafdist.errors import DomainException, IntegrityException, VerificationFailedException
from leafdist.exact.counts import cumulative_fraction, cumulative_fraction_direct, distribution, tree_count
from leafdist.exact.moments import mean_distance, moments_from_distribution, variance_distance
from leafdist.exact.quantiles import EXACT_MAX_N, LOG_MARGIN, percentile, quantile_scan
from leafdist.helpers import elapsed_seconds, format_ratio
from leafdist.oracle.certificate import (
    certificate_matches_ratio,
    cumulative_fraction_from_s_k,
    cumulative_fraction_unshifted,
    s_k_closed,
    s_k_direct_table,
    term_ratio_check,
    verify_certificate,
)
from leafdist.oracle.series import b_power_table, c_via_series
from leafdist.trees.enumeration import DEFAULT_MAX_LEAVES, check_enumerable, empirical_distribution

# (where, expected, actual); expected always comes from the independent side of a check
Comparison = Tuple[str, Any, Any]

QUANTILE_THRESHOLDS = (Fraction(1, 4), Fraction(1, 2), Fraction(9, 10))


def _render(value: Any) -> str:
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return format_ratio(value)
    return str(value)


class CheckResult:
    def __init__(self, name: str, checked: int, elapsed_s: float, counterexample: Optional[str] = None):
        self.name = name
        self.checked = checked
        self.elapsed_s = elapsed_s
        self.counterexample = counterexample

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def as_dict(self) -> Dict[str, Any]:
        return {
            "check": self.name,
            "status": "pass" if self.passed else "fail",
            "checked": self.checked,
            "elapsed_s": round(self.elapsed_s, 3),
            "counterexample": self.counterexample or "",
        }

    def __repr__(self):
        return f"<CheckResult[{self.name}: {'pass' if self.passed else 'fail'}, checked:{self.checked}]>"


class VerificationController:
    """Cross-checks every closed form against an independent computation of the same quantity."""

    def __init__(
        self,
        *,
        max_n_enum: int = 9,
        max_n_formula: int = 200,
        max_n_series: int = 100,
        max_n_ratio: int = 50,
        workers: int = 1,
        max_leaves: int = DEFAULT_MAX_LEAVES,
        exact_max_n: int = EXACT_MAX_N,
        log_margin: float = LOG_MARGIN,
    ):
        for name, value, minimum in (
            ("max_n_enum", max_n_enum, 3),
            ("max_n_formula", max_n_formula, 3),
            ("max_n_series", max_n_series, 3),
            ("max_n_ratio", max_n_ratio, 4),
        ):
            if value < minimum:
                raise DomainException(f"{name} must be at least {minimum}, got {value}.")
        check_enumerable(max_n_enum, max_leaves)
        self.max_n_enum = max_n_enum
        self.max_n_formula = max_n_formula
        self.max_n_series = max_n_series
        self.max_n_ratio = max_n_ratio
        self.workers = workers
        self.max_leaves = max_leaves
        self.exact_max_n = exact_max_n
        self.log_margin = log_margin
        self._logger = logging.getLogger(__name__)

    def checks(self) -> List[Tuple[str, Callable[[], Iterator[Comparison]]]]:
        return [
            ("enumeration_vs_formula", self.enumeration_vs_formula),
            ("normalization", self.normalization),
            ("cumulative_closed_form", self.cumulative_closed_form),
            ("cumulative_from_s_k", self.cumulative_from_s_k),
            ("series_vs_formula", self.series_vs_formula),
            ("certificate", self.certificate),
            ("term_ratio", self.term_ratio),
            ("s_k_closed_vs_direct", self.s_k_closed_vs_direct),
            ("moments", self.moments),
            ("quantiles_vs_scan", self.quantiles_vs_scan),
        ]

    def run(self) -> List[CheckResult]:
        return [self.run_check(name, comparisons) for name, comparisons in self.checks()]

    def run_check(self, name: str, comparisons: Callable[[], Iterator[Comparison]]) -> CheckResult:
        start = pendulum.now()
        checked = 0
        counterexample = None
        try:
            for where, expected, actual in comparisons():
                checked += 1
                if expected != actual:
                    counterexample = f"{where}: expected {_render(expected)}, got {_render(actual)}"
                    break
        except IntegrityException as e:
            counterexample = e.format_message()
        result = CheckResult(name, checked, elapsed_seconds(start), counterexample)
        if result.passed:
            self._logger.info(f"{name}: {checked} comparisons passed in {result.elapsed_s:.3f}s.")
        else:
            self._logger.warning(f"{name} failed after {checked} comparisons: {counterexample}")
        return result

    @staticmethod
    def raise_on_failure(results: List[CheckResult]) -> None:
        for result in results:
            if not result.passed:
                raise VerificationFailedException(result.name, result.counterexample)

    def enumeration_vs_formula(self) -> Iterator[Comparison]:
        for n in range(3, self.max_n_enum + 1):
            enumerated = empirical_distribution(n, workers=self.workers, max_leaves=self.max_leaves)
            for i in range(1, n):
                yield f"n={n}, i={i}", enumerated.count(i), distribution(n).count(i)

    def normalization(self) -> Iterator[Comparison]:
        for n in range(3, self.max_n_formula + 1):
            yield f"n={n}", tree_count(n), distribution(n).total

    def cumulative_closed_form(self) -> Iterator[Comparison]:
        for n in range(3, self.max_n_formula + 1):
            for k in range(1, n):
                yield f"n={n}, k={k}", cumulative_fraction_direct(n, k), cumulative_fraction(n, k)

    def cumulative_from_s_k(self) -> Iterator[Comparison]:
        for n in range(4, self.max_n_formula + 1):
            for k in range(1, n):
                yield f"n={n}, k={k}", cumulative_fraction(n, k), cumulative_fraction_from_s_k(n, k)
        for n in range(4, self.max_n_ratio + 1):
            for k in range(1, n):
                yield f"unshifted n={n}, k={k}", cumulative_fraction_direct(n, k), cumulative_fraction_unshifted(n, k)

    def series_vs_formula(self) -> Iterator[Comparison]:
        powers = b_power_table(max(self.max_n_series - 2, 1))
        for n in range(3, self.max_n_series + 1):
            for i in range(1, n):
                yield f"n={n}, i={i}", distribution(n).count(i), c_via_series(n, i, powers=powers)

    def certificate(self) -> Iterator[Comparison]:
        yield "symbolic identity", True, verify_certificate()
        yield "term ratio", True, certificate_matches_ratio()
        for n in range(4, self.max_n_ratio + 1):
            yield f"n={n}", True, verify_certificate(n)

    def term_ratio(self) -> Iterator[Comparison]:
        for n in range(4, self.max_n_ratio + 1):
            for i in range(1, n - 2):
                yield f"n={n}, i={i}", True, term_ratio_check(n, i)

    def s_k_closed_vs_direct(self) -> Iterator[Comparison]:
        for n in range(4, self.max_n_formula + 1):
            direct = s_k_direct_table(n)
            yield f"boundary n={n}", 4 * math.factorial(2 * n - 6) // math.factorial(n - 3), direct[2]
            for k in range(2, n - 1):
                yield f"n={n}, k={k}", direct[k], s_k_closed(n, k)

    def moments(self) -> Iterator[Comparison]:
        for n in range(3, self.max_n_formula + 1):
            mean, variance = moments_from_distribution(n)
            yield f"mean n={n}", mean, mean_distance(n)
            yield f"variance n={n}", variance, variance_distance(n)

    def quantiles_vs_scan(self) -> Iterator[Comparison]:
        for n in range(3, self.max_n_formula + 1):
            for p in QUANTILE_THRESHOLDS:
                scanned = quantile_scan(n, p)
                exact = percentile(n, p, exact_max_n=self.exact_max_n, log_margin=self.log_margin)
                yield f"n={n}, p={format_ratio(p)}", scanned, exact
                # exact_max_n below 3 sends every n through the log-space solver
                log_space = percentile(n, p, exact_max_n=2, log_margin=self.log_margin)
                yield f"log-space n={n}, p={format_ratio(p)}", scanned, log_space
