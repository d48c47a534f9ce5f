from collections import Counter
from math import comb, factorial

import pytest
from sympy.functions.combinatorial.numbers import partition as npartitions

from bellpoly.bell import (ConstructionError, a_row, a_table, abell, bell, bell_bruteforce, bell_recurrence,
                           bell_table, is_homogeneous, is_isobaric, partitions_exact)
from bellpoly.combinat import delta, lah_signed, lah_unsigned, stirling1_signed, stirling2
from bellpoly.polyring import Polynomial, parse
from bellpoly.series import Series

from oracles import set_partitions

X1, X2, X3 = (Polynomial.var(i) for i in (1, 2, 3))


def bell_by_block_types(n, k):
    """Coefficient of prod X_j^{r_j} = number of set partitions with r_j blocks of size j."""
    counts = Counter()
    for p in set_partitions(range(n)):
        if len(p) == k:
            counts[tuple(sorted(Counter(len(b) for b in p).items()))] += 1
    return Polynomial(dict(counts))


def test_bruteforce_examples():
    assert bell_bruteforce(3, 2) == 3 * X1 * X2
    assert bell_bruteforce(4, 2) == 3 * X2 ** 2 + 4 * X1 * X3
    for n in range(8):
        assert bell_bruteforce(n, n) == X1 ** n


def test_recurrence_examples():
    assert bell_recurrence(2, 1) == X2
    assert bell_recurrence(0, 0) == 1
    assert bell_recurrence(6, 3) == bell_bruteforce(6, 3)
    assert bell_recurrence(3, 0) == 0


def test_block_type_oracle():
    for n in range(8):
        for k in range(n + 1):
            assert bell_bruteforce(n, k) == bell_by_block_types(n, k)


def test_recurrence_matches_bruteforce():
    for n in range(11):
        for k in range(n + 1):
            assert bell_recurrence(n, k) == bell_bruteforce(n, k)


def test_partition_enumeration():
    for n in range(1, 15):
        assert sum(1 for k in range(n + 1) for _ in partitions_exact(n, k)) == npartitions(n)
    assert list(partitions_exact(4, 2)) == [(3, 1), (2, 2)]


def test_index_errors():
    with pytest.raises(ValueError):
        bell_bruteforce(2, 3)
    with pytest.raises(ValueError):
        bell_recurrence(-1, 0)
    with pytest.raises(ValueError):
        abell(2, 3)
    with pytest.raises(ValueError):
        a_table(0)


def test_table_invariants():
    table = bell_table(10)
    assert table[0, 0] == 1
    for n, k, b in table.cells():
        if n >= 1 and k == 0:
            assert b.is_zero()
        if n == k:
            assert b == X1 ** n
        assert is_homogeneous(b, k)
        assert is_isobaric(b, n)
        assert all(v <= n - k + 1 for v in b.variables())


def test_a_examples():
    assert abell(1, 1) == Polynomial.var(1, -1)
    assert abell(2, 1) == -Polynomial.var(1, -3) * X2
    assert abell(2, 1).to_canonical_string() == "-X1^-3*X2"
    assert abell(2, 1).eval_all_ones() == -1 == stirling1_signed(2, 1)


def test_a_table_structure():
    table = a_table(10)
    for n, k, a in table.cells():
        if n >= 1 and k >= 1:
            assert a.min_exponent(1) >= -(2 * n - k)
            assert set(a.variables()) <= set(range(1, n - k + 2))
        if n == k:
            assert a == Polynomial.var(1, -n)


def test_inversion():
    for n in range(1, 11):
        for k in range(1, n + 1):
            total = Polynomial()
            for j in range(k, n + 1):
                total = total + abell(n, j) * bell(j, k)
            assert total == delta(n, k)


def test_other_side_inversion():
    # left and right inverses coincide for triangular matrices
    for n in range(1, 9):
        for k in range(1, n + 1):
            total = Polynomial()
            for j in range(k, n + 1):
                total = total + bell(n, j) * abell(j, k)
            assert total == delta(n, k)


def test_all_ones_specializations():
    for n in range(11):
        for k in range(n + 1):
            assert bell(n, k).eval_all_ones() == stirling2(n, k)
            assert abell(n, k).eval_all_ones() == stirling1_signed(n, k)


def test_factorial_argument_gives_lah():
    g = Series.geometric_x(10)
    for n in range(1, 11):
        for k in range(1, n + 1):
            value = bell(n, k).evaluate({j: factorial(j) for j in range(1, n + 1)})
            from_series = factorial(n) * (g ** k).coeffs[n] / factorial(k)
            assert value == from_series == factorial(n) // factorial(k) * comb(n - 1, k - 1)
            assert value == lah_unsigned(n, k)
            assert abell(n, k).evaluate({j: factorial(j) for j in range(1, n + 1)}) == (-1) ** k * lah_signed(n, k)


def test_canonical_roundtrip_of_families():
    for n in range(9):
        for k in range(n + 1):
            for p in (bell(n, k), abell(n, k)):
                assert parse(p.to_canonical_string()) == p


def test_a_row_is_cached_and_pure():
    assert a_row(7) is a_row(7)
    fresh = a_row.__wrapped__(7)
    assert fresh == a_row(7)


def test_construction_error_is_loud(monkeypatch):
    import bellpoly.bell as bellmod

    monkeypatch.setattr(bellmod, "bell", lambda n, k: Polynomial.var(5))
    with pytest.raises(ConstructionError):
        bellmod.a_row.__wrapped__(3)
