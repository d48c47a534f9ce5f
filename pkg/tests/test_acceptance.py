"""Exit criteria. Every comparison is exact; timing bounds are wall-clock seconds.

Each test records one PASS/FAIL line; conftest prints them in the terminal summary.
"""

import random
import subprocess
import sys
import time
from math import comb, factorial

import pytest

from bellpoly import bell as bellmod
from bellpoly import facpoly
from bellpoly.bell import abell, bell, bell_bruteforce, bell_recurrence
from bellpoly.combinat import delta, lah_signed, lah_unsigned, stirling1_signed, stirling2
from bellpoly.numfam import PRINTED_CLOSING_COEFFS, closing_identity_coeffs
from bellpoly.polyring import Polynomial
from bellpoly.series import (Series, compose, invert_composition, random_pair, random_series, verify_a_coeff,
                             verify_bell_coeff, verify_faa_di_bruno)
from bellpoly.verify import run_identity

RESULTS = []


@pytest.fixture
def record(request):
    def _record(ok, detail=""):
        doc = request.node.function.__doc__.strip().splitlines()[0]
        RESULTS.append(f"{'PASS' if ok else 'FAIL'}  {doc}{'  ' + detail if detail else ''}")
        assert ok, detail
    return _record


def _clear_caches():
    bellmod.bell_recurrence.cache_clear()
    bellmod.a_row.cache_clear()
    for fn in (facpoly.potential, facpoly.lower, facpoly.upper):
        fn.cache_clear()


def test_c01_ab_inversion(record):
    """C1 A/B inversion exact for 1<=k<=n<=10, under 10 s"""
    _clear_caches()
    start = time.perf_counter()
    ok = True
    for n in range(1, 11):
        for k in range(1, n + 1):
            total = Polynomial()
            for j in range(k, n + 1):
                total = total + abell(n, j) * bell(j, k)
            ok &= total == Polynomial.const(delta(n, k))
    elapsed = time.perf_counter() - start
    record(ok and elapsed < 10.0, f"{elapsed:.3f}s")


def test_c02_specializations(record):
    """C2 all-ones: B->s2, A->s1, P->k^n for 0<=k<=n<=10"""
    ok = all(
        bell(n, k).eval_all_ones() == stirling2(n, k)
        and abell(n, k).eval_all_ones() == stirling1_signed(n, k)
        and facpoly.potential(n, k).eval_all_ones() == k ** n
        for n in range(11) for k in range(n + 1)
    )
    record(ok)


def test_c03_bell_oracle(record):
    """C3 recurrence B(n,k) == diophantine-sum B(n,k) for 0<=k<=n<=10"""
    bellmod.bell_recurrence.cache_clear()
    ok = all(bell_recurrence(n, k) == bell_bruteforce(n, k) for n in range(11) for k in range(n + 1))
    record(ok)


def test_c04_conversions(record):
    """C4 lower<->potential round trip and upper via cycle numbers agree with direct builds, 0<=k<=n<=8"""
    _clear_caches()
    ok = all(
        facpoly.lower_from_potential(n, k) == facpoly.lower_factorial_direct(n, k)
        and facpoly.potential_from_lower(n, k) == facpoly.potential(n, k)
        and facpoly.upper_from_potential(n, k) == facpoly.upper_factorial_direct(n, k)
        for n in range(9) for k in range(n + 1)
    )
    record(ok)


def test_c05_prop31(record):
    """C5 signed-Lah conversions upper<->lower (i) and (ii), 0<=k<=n<=8"""
    ok = all(
        facpoly.upper_from_lower(n, k) == facpoly.upper_factorial_direct(n, k)
        and facpoly.lower_from_upper(n, k) == facpoly.lower_factorial_direct(n, k)
        for n in range(9) for k in range(n + 1)
    )
    record(ok)


def test_c06_lah_laws(record):
    """C6 Lah self-inverse and Stirling representation, 0<=k<=n<=30"""
    ok = True
    for n in range(31):
        for k in range(n + 1):
            ok &= sum(lah_signed(n, j) * lah_signed(j, k) for j in range(k, n + 1)) == delta(n, k)
            ok &= sum((-1) ** j * stirling1_signed(n, j) * stirling2(j, k) for j in range(k, n + 1)) == lah_signed(n, k)
    record(ok)


def test_c07_power_sums(record):
    """C7 cycle/signed-Stirling power sums (1..20), prf1 lemma (k<=25), psw1 (1..20); suite under 5 s"""
    start = time.perf_counter()
    reports = [run_identity("prop42", 20, 20), run_identity("prop44", 20, 20),
               run_identity("prf1", 25, 25), run_identity("psw1", 20, 20)]
    elapsed = time.perf_counter() - start
    failed = [r.identity for r in reports if not r.passed]
    record(not failed and elapsed < 5.0, f"{elapsed:.3f}s" + (f" failed={failed}" if failed else ""))


def test_c08_closing_identities(record):
    """C8 closing identities n=1,2,3: coefficients (1),(3,-2),(7,-12,6), numeric 2<=k<=20, literal k-10 fails"""
    coeffs_ok = all(closing_identity_coeffs(n) == PRINTED_CLOSING_COEFFS[n] for n in (1, 2, 3))
    coeffs_ok &= PRINTED_CLOSING_COEFFS == {1: (1,), 2: (3, -2), 3: (7, -12, 6)}
    numeric_ok = all(run_identity(f"closing-n{n}", 20, 20).passed for n in (1, 2, 3))
    literal = run_identity("closing-n3-literal", 20, 20)
    record(coeffs_ok and numeric_ok and not literal.passed,
           f"literal reading first fails at k={literal.counterexample.k if literal.counterexample else None}")


def test_c09_series_oracle(record):
    """C9 Faa di Bruno on 20 random pairs (n<=8); B/A coefficient semantics on 5 series; inverse round trip"""
    rng = random.Random(2024)
    ok = True
    for _ in range(20):
        f, g = random_pair(rng, 8)
        ok &= all(verify_faa_di_bruno(f, g, n).passed for n in range(9))
    for _ in range(5):
        g = random_series(rng, 8, constant=False, invertible=True)
        ginv = invert_composition(g)
        ok &= compose(g, ginv) == Series.identity(8) and compose(ginv, g) == Series.identity(8)
        for n in range(1, 9):
            for k in range(1, n + 1):
                ok &= verify_bell_coeff(g, n, k).passed
                ok &= verify_a_coeff(g, n, k, inverse=ginv).passed
    record(ok)


def test_c10_factorial_argument(record):
    """C10 B(n,k) at X_j=j! equals n!/k! C(n-1,k-1) = |l(n,k)|, 1<=k<=n<=10"""
    ok = True
    for n in range(1, 11):
        for k in range(1, n + 1):
            value = bell(n, k).evaluate({j: factorial(j) for j in range(1, n + 1)})
            closed = factorial(n) // factorial(k) * comb(n - 1, k - 1)
            ok &= value == closed == lah_unsigned(n, k)
    record(ok)


def test_c11_determinism(record):
    """C11 `verify --identity all --seed 7` is byte-identical across two runs"""
    cmd = [sys.executable, "-m", "bellpoly", "verify", "--identity", "all", "--seed", "7"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    ok = first.returncode == second.returncode == 0 and first.stdout == second.stdout and first.stdout
    record(bool(ok), f"{len(first.stdout)} bytes")
