"""Telescoping proof of the cumulative closed form.

The partial sums of the counts reduce to S_k = t_1 + ... + t_{k-1} with t_i = i 2^(i+1) (2n-i-5)! / (n-i-2)!.
t is hypergeometric in i and the fixed certificate a(i) = 2(2+i-n), b(i) = 5+i-2n, c(i) = i, x(i) = 1 turns S_k into
(4+k-2n) 2^(k+1) (2n-k-5)!/(n-k-2)! + g(n) with g(n) = 4 (2n-5)!/(n-3)!.
"""
import logging
import math
from fractions import Fraction
from typing import Dict, Optional

import sympy as sp

from leafdist.errors import IntegrityException
from leafdist.exact.counts import check_index, check_leaf_count, falling_factorial_ratio
from leafdist.resources.certificate import LEAF_DISTANCE_CERTIFICATE, HypergeometricCertificate, i, n

log = logging.getLogger(__name__)

TERM_RATIO = 2 * (1 + i) * (2 + i - n) / (i * (5 + i - 2 * n))


def term(n_leaves: int, index: int) -> int:
    """t_i = i 2^(i+1) (2n-i-5)! / (n-i-2)!."""
    check_leaf_count(n_leaves, minimum=4)
    check_index("Term index i", index, 1, n_leaves - 2)
    return index * 2 ** (index + 1) * falling_factorial_ratio(2 * n_leaves - index - 5, n_leaves - index - 2)


def term_ratio_check(n_leaves: int, index: int) -> bool:
    """Whether t_{i+1} * i (5+i-2n) == t_i * 2 (1+i) (2+i-n) holds for the concrete values."""
    check_leaf_count(n_leaves, minimum=4)
    check_index("Term index i", index, 1, n_leaves - 3)
    left = term(n_leaves, index + 1) * index * (5 + index - 2 * n_leaves)
    right = term(n_leaves, index) * 2 * (1 + index) * (2 + index - n_leaves)
    return left == right


def verify_certificate(
    n_leaves: Optional[int] = None, certificate: HypergeometricCertificate = LEAF_DISTANCE_CERTIFICATE
) -> bool:
    """Check a(i) x(i+1) - b(i-1) x(i) = c(i) coefficient-wise, for a given n or with n left symbolic."""
    if n_leaves is not None:
        check_leaf_count(n_leaves, minimum=4)
        certificate = certificate.substitute(n_leaves)
    residual = sp.Poly(certificate.gosper_residual(), i, n)
    if not residual.is_zero:
        log.debug(f"Certificate {certificate} leaves the residual {residual.as_expr()}.")
    return residual.is_zero


def certificate_matches_ratio(certificate: HypergeometricCertificate = LEAF_DISTANCE_CERTIFICATE) -> bool:
    """Whether a(i)/b(i) * c(i+1)/c(i) equals t_{i+1}/t_i as rational functions of i and n."""
    factored = certificate.a / certificate.b * certificate.c.subs(i, i + 1) / certificate.c
    return sp.cancel(factored - TERM_RATIO) == 0


def _check_s_k_domain(n_leaves: int, k: int) -> None:
    check_leaf_count(n_leaves, minimum=4)
    check_index("k", k, 2, n_leaves - 2)


def boundary_g(n_leaves: int) -> int:
    """g(n) = 4 (2n-5)! / (n-3)!."""
    check_leaf_count(n_leaves)
    return 4 * falling_factorial_ratio(2 * n_leaves - 5, n_leaves - 3)


def s_k_closed(n_leaves: int, k: int) -> int:
    _check_s_k_domain(n_leaves, k)
    boundary = (
        (4 + k - 2 * n_leaves) * 2 ** (k + 1) * falling_factorial_ratio(2 * n_leaves - k - 5, n_leaves - k - 2)
    )
    value = boundary + boundary_g(n_leaves)
    if value < 0:
        raise IntegrityException(f"Closed form of S_{k} for n={n_leaves} is negative: {value}.")
    return value


def s_k_direct(n_leaves: int, k: int) -> int:
    _check_s_k_domain(n_leaves, k)
    return sum(term(n_leaves, index) for index in range(1, k))


def s_k_direct_table(n_leaves: int) -> Dict[int, int]:
    """All S_k for k = 2..n-2 from one running sum."""
    check_leaf_count(n_leaves, minimum=4)
    table = {}
    running = 0
    for k in range(2, n_leaves - 1):
        running += term(n_leaves, k - 1)
        table[k] = running
    return table


def partial_sum_unshifted(n_leaves: int, k: int) -> int:
    """sum_{i=2}^{k} (i-1) 2^i (2n-i-4)! / (n-i-1)!, the sum before the index shift i -> i + 1."""
    check_leaf_count(n_leaves)
    check_index("k", k, 1, n_leaves - 1)
    return sum(
        (index - 1) * 2 ** index * falling_factorial_ratio(2 * n_leaves - index - 4, n_leaves - index - 1)
        for index in range(2, k + 1)
    )


def _prefactor(n_leaves: int) -> Fraction:
    # (n-3)! / (4 (2n-5)!) turns the sums of t_i into P(d <= k)
    return Fraction(math.factorial(n_leaves - 3), 4 * math.factorial(2 * n_leaves - 5))


def cumulative_fraction_unshifted(n_leaves: int, k: int) -> Fraction:
    return _prefactor(n_leaves) * partial_sum_unshifted(n_leaves, k)


def cumulative_fraction_from_s_k(n_leaves: int, k: int) -> Fraction:
    """P(d <= k) reassembled from the closed form of S_k.

    S_1 is the empty sum. At k = n - 1 the boundary term has 1/(-1)! = 0, which leaves g(n) alone.
    """
    check_leaf_count(n_leaves)
    check_index("k", k, 1, n_leaves - 1)
    if k == 1:
        return Fraction(0)
    if k == n_leaves - 1:
        return _prefactor(n_leaves) * boundary_g(n_leaves)
    return _prefactor(n_leaves) * s_k_closed(n_leaves, k)
