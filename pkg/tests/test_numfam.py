from math import factorial

import pytest
from hypothesis import given, strategies as st

from bellpoly.combinat import cycle, stirling1_signed, stirling2
from bellpoly.numfam import (PRINTED_CLOSING_COEFFS, WeightScheme, closing_identity_coeffs, closing_identity_lhs,
                             closing_identity_rhs, lower_assoc, power_sum_direct, power_sum_reduce,
                             prf1_lhs, prf1_rhs, prop42_rhs, prop44_rhs, psw1_rhs, sum_rule_ones, upper_assoc,
                             upper_sum)


def test_upper_assoc_examples():
    assert upper_assoc(2, 2) == 1 + 4 == 5
    assert all(upper_assoc(n, 1) == 1 for n in range(1, 10))
    assert upper_assoc(2, 3) == 2 * 1 + 3 * 4 + 1 * 9 == 23
    with pytest.raises(ValueError):
        upper_assoc(0, 2)


def test_lower_assoc_examples():
    assert lower_assoc(2, 2) == 3
    assert all(lower_assoc(n, 1) == 1 for n in range(1, 10))
    assert lower_assoc(2, 3) == 2 - 12 + 9 == -1
    with pytest.raises(ValueError):
        lower_assoc(0, 2)


def test_power_sum_examples():
    assert power_sum_reduce(WeightScheme.ONES, 2, 3) == 14 == 1 + 4 + 9
    # j=1: 1*1*C(4,2)=6, j=2: 2*1*C(4,3)=8
    assert 1 * stirling2(2, 1) * 6 + 2 * stirling2(2, 2) * 4 == 14
    assert power_sum_reduce(WeightScheme.CYCLE, 2, 3) == 23
    assert power_sum_reduce(WeightScheme.STIRLING1_SIGNED, 2, 3) == -1


def test_custom_weights():
    assert power_sum_reduce([5, -2, 7], 3, 3) == power_sum_direct([5, -2, 7], 3, 3) == 5 - 16 + 189
    with pytest.raises(ValueError):
        power_sum_reduce([1, 2], 2, 3)


@given(st.integers(1, 12), st.lists(st.integers(-1000, 1000), min_size=1, max_size=12))
def test_reduction_holds_for_arbitrary_weights(n, ws):
    k = len(ws)
    assert power_sum_reduce(ws, n, k) == power_sum_direct(ws, n, k)


def test_reduction_all_schemes():
    for n in range(1, 21):
        for k in range(1, 21):
            for scheme in WeightScheme:
                assert power_sum_reduce(scheme, n, k) == power_sum_direct(scheme, n, k)


def test_sum_rule_ones():
    assert sum_rule_ones(3, 1) == 6 == 1 + 2 + 3
    assert all(sum_rule_ones(k, k) == 1 for k in range(1, 10))
    assert sum_rule_ones(4, 2) == 10 == 1 + 3 + 6
    for k in range(1, 21):
        for j in range(1, k + 1):
            assert sum_rule_ones(k, j) == upper_sum(WeightScheme.ONES, k, j)
    with pytest.raises(ValueError):
        sum_rule_ones(2, 3)


def test_psw1():
    for n in range(1, 21):
        for k in range(1, 21):
            assert psw1_rhs(n, k) == sum(r ** n for r in range(1, k + 1))


def test_prop42_examples():
    assert prop42_rhs(2, 3) == 11 + 12 == 23
    assert prop42_rhs(1, 1) == 1
    assert prop42_rhs(3, 2) == upper_assoc(3, 2) == 9


def test_prop42_sweep():
    for n in range(1, 21):
        for k in range(1, 21):
            assert prop42_rhs(n, k) == upper_assoc(n, k)
    for k in range(1, 21):
        for j in range(1, k + 1):
            assert upper_sum(WeightScheme.CYCLE, k, j) == cycle(k + 1, j + 1)


def test_prop44_examples():
    assert prop44_rhs(2, 3) == -1
    for k in range(2, 12):
        assert prop44_rhs(1, k) == (-1) ** k * factorial(k - 2) == lower_assoc(1, k)
    assert lower_assoc(1, 3) == -1
    assert prop44_rhs(2, 2) == 3 == lower_assoc(2, 2)
    with pytest.raises(ValueError):
        prop44_rhs(1, 0)


def test_prop44_sweep():
    for n in range(1, 21):
        for k in range(1, 21):
            assert prop44_rhs(n, k) == lower_assoc(n, k)


def test_prf1_examples():
    assert prf1_lhs(1, 0) == 1 == prf1_rhs(1, 0)
    assert prf1_lhs(3, 1) == -3 == 3 * stirling1_signed(2, 1)
    assert prf1_lhs(4, 2) == 3 * (-6) + 6 * 1 == -12 == 4 * stirling1_signed(3, 2)
    with pytest.raises(ValueError):
        prf1_lhs(3, 3)


def test_prf1_sweep_and_followup():
    for k in range(1, 26):
        for j in range(k):
            assert prf1_lhs(k, j) == prf1_rhs(k, j)
        for j in range(1, k + 1):
            full = upper_sum(WeightScheme.STIRLING1_SIGNED, k, j)
            assert full == stirling1_signed(k, j) + k * stirling1_signed(k - 1, j)
            assert full == stirling1_signed(k - 1, j - 1) + stirling1_signed(k - 1, j)


def test_closing_coefficients_match_reference():
    assert closing_identity_coeffs(1) == (1,) == PRINTED_CLOSING_COEFFS[1]
    assert closing_identity_coeffs(2) == (3, -2) == PRINTED_CLOSING_COEFFS[2]
    assert closing_identity_coeffs(3) == (7, -12, 6) == PRINTED_CLOSING_COEFFS[3]
    with pytest.raises(ValueError):
        closing_identity_coeffs(4)


def test_closing_identities_numerically():
    for n in (1, 2, 3):
        coeffs = closing_identity_coeffs(n)
        for k in range(2, 21):
            assert closing_identity_lhs(n, k) == closing_identity_rhs(coeffs, k)
            assert closing_identity_lhs(n, k) == (-1) ** k * lower_assoc(n, k)


def test_closing_literal_k_minus_10_fails():
    coeffs = PRINTED_CLOSING_COEFFS[3]
    bad = [k for k in range(2, 21) if closing_identity_lhs(3, k) != closing_identity_rhs(coeffs, k, (1, 1, 10))]
    assert bad and bad[0] == 4
