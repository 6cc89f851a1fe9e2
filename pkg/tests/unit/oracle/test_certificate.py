import math
from fractions import Fraction

import pytest

from leafdist.errors import DomainException
from leafdist.exact.counts import cumulative_fraction, cumulative_fraction_direct
from leafdist.oracle.certificate import (
    boundary_g,
    certificate_matches_ratio,
    cumulative_fraction_from_s_k,
    cumulative_fraction_unshifted,
    partial_sum_unshifted,
    s_k_closed,
    s_k_direct,
    s_k_direct_table,
    term,
    term_ratio_check,
    verify_certificate,
)
from leafdist.resources.certificate import LEAF_DISTANCE_CERTIFICATE, i, n


def test_certificate_symbolic():
    assert verify_certificate()


def test_certificate_for_concrete_n():
    for n_leaves in range(4, 30):
        assert verify_certificate(n_leaves)


def test_certificate_matches_term_ratio():
    assert certificate_matches_ratio()


def test_broken_certificate_is_rejected():
    broken = LEAF_DISTANCE_CERTIFICATE.replace(c=i + 1)
    assert not verify_certificate(certificate=broken)
    assert not verify_certificate(7, certificate=broken)
    assert not certificate_matches_ratio(LEAF_DISTANCE_CERTIFICATE.replace(a=2 * (3 + i - n)))


def test_certificate_as_dict():
    rendered = LEAF_DISTANCE_CERTIFICATE.as_dict()
    assert set(rendered) == {"a", "b", "c", "x"}
    assert (rendered["c"], rendered["x"]) == ("i", "1")


def test_term():
    # t_1 = 4 (2n-6)! / (n-3)!
    for n_leaves in range(4, 20):
        assert term(n_leaves, 1) == 4 * math.factorial(2 * n_leaves - 6) // math.factorial(n_leaves - 3)
    with pytest.raises(DomainException):
        term(6, 5)


def test_term_ratio_check():
    for n_leaves in range(4, 60):
        assert all(term_ratio_check(n_leaves, index) for index in range(1, n_leaves - 2))
    with pytest.raises(DomainException):
        term_ratio_check(6, 4)


def test_boundary_g():
    assert boundary_g(4) == 4 * math.factorial(3) // math.factorial(1)
    assert boundary_g(6) == 4 * 7 * 6 * 5 * 4


def test_s_k_closed_matches_direct():
    for n_leaves in range(4, 120):
        table = s_k_direct_table(n_leaves)
        assert table[2] == 4 * math.factorial(2 * n_leaves - 6) // math.factorial(n_leaves - 3)
        for k in range(2, n_leaves - 1):
            assert s_k_closed(n_leaves, k) == table[k], f"n={n_leaves}, k={k}"
    assert s_k_direct(12, 7) == s_k_direct_table(12)[7]


@pytest.mark.parametrize("k", [1, 5])
def test_s_k_rejects_index(k: int):
    with pytest.raises(DomainException):
        s_k_closed(6, k)
    with pytest.raises(DomainException):
        s_k_direct(6, k)


def test_cumulative_fraction_from_s_k():
    for n_leaves in range(4, 80):
        for k in range(1, n_leaves):
            assert cumulative_fraction_from_s_k(n_leaves, k) == cumulative_fraction(n_leaves, k)
    assert cumulative_fraction_from_s_k(5, 4) == 1


def test_index_shift():
    # sum_{i=2}^{k} of the unshifted terms is S_k
    for n_leaves in range(4, 40):
        for k in range(2, n_leaves - 1):
            assert partial_sum_unshifted(n_leaves, k) == s_k_closed(n_leaves, k)
        for k in range(1, n_leaves):
            assert cumulative_fraction_unshifted(n_leaves, k) == cumulative_fraction_direct(n_leaves, k)
    assert partial_sum_unshifted(6, 1) == 0
    assert cumulative_fraction_unshifted(4, 2) == Fraction(1, 3)
