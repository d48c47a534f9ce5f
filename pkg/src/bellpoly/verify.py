"""Named identity checks swept over index ranges.

Every checker yields ``(n, k, lhs, rhs)`` cases; :func:`run_identity`
compares them exactly and stops at the first mismatch. Sides are rendered
with ``str`` (canonical text for polynomials) when a counterexample is
recorded.

Index conventions that are not plain (n, k):

* ``prf1`` reports (k, j) in the (n, k) slots.
* ``faa-di-bruno``, ``bell-coeff`` and ``a-coeff`` use seeded random series;
  for faa-di-bruno the k slot holds the sample number.
* ``closing-n*``: k = 0 is the comparison of the derived coefficient
  sequence with the reference values; k >= 2 are the numeric checks.
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass
from math import factorial
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from . import numfam
from .bell import abell, bell, bell_recurrence, bell_bruteforce
from .combinat import (cycle, delta, falling_coeffs, lah_signed, lah_unsigned, rising_coeffs,
                       stirling1_signed, stirling2)
from .facpoly import (lower, lower_factorial_direct, lower_from_potential, lower_from_upper, potential,
                      potential_from_lower, upper, upper_factorial_direct, upper_from_lower,
                      upper_from_potential)
from .polyring import Polynomial
from .report import Counterexample, IdentityReport
from .series import (Series, invert_composition, random_pair, random_series, verify_a_coeff,
                     verify_bell_coeff, verify_faa_di_bruno)

Case = Tuple[int, int, object, object]
Checker = Callable[[int, int, random.Random], Iterator[Case]]

NUMBER, POLY, SERIES = "number", "poly", "series"

POLY_LIMIT = 10
SERIES_LIMIT = 10
DEFAULT_MAX_N = 30

__all__ = [
    "Identity",
    "IDENTITIES",
    "DEFAULT_IDENTITIES",
    "LimitError",
    "UnknownIdentityError",
    "run_identity",
    "run_all",
    "number_limit",
]


class UnknownIdentityError(KeyError):
    pass


class LimitError(ValueError):
    pass


@dataclass(frozen=True)
class Identity:
    name: str
    kind: str
    default_range: Tuple[int, int]
    check: Checker
    description: str
    in_default: bool = True


def number_limit() -> int:
    raw = os.environ.get("FACPOLY_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise LimitError(f"FACPOLY_MAX_N must be an integer, got {raw!r}")
    if value < 1:
        raise LimitError("FACPOLY_MAX_N must be >= 1")
    return value


def _limit_for(kind: str) -> int:
    cap = number_limit()
    if kind == POLY:
        return min(cap, POLY_LIMIT)
    if kind == SERIES:
        return min(cap, SERIES_LIMIT)
    return cap


def _triangle(nmax: int, kmax: int, n0: int = 0, k0: int = 0) -> Iterator[Tuple[int, int]]:
    for n in range(n0, nmax + 1):
        for k in range(k0, min(n, kmax) + 1):
            yield n, k


def _rectangle(nmax: int, kmax: int) -> Iterator[Tuple[int, int]]:
    for n in range(1, nmax + 1):
        for k in range(1, kmax + 1):
            yield n, k


# checkers ----------------------------------------------------------------

def _ab_inversion(nmax, kmax, rng):
    for n, k in _triangle(nmax, kmax, 1, 1):
        lhs = Polynomial()
        for j in range(k, n + 1):
            lhs = lhs + abell(n, j) * bell(j, k)
        yield n, k, lhs, Polynomial.const(delta(n, k))


def _stirling_inversion(nmax, kmax, rng):
    for n, k in _triangle(nmax, kmax):
        yield n, k, sum(stirling1_signed(n, j) * stirling2(j, k) for j in range(k, n + 1)), delta(n, k)
        yield n, k, sum(stirling2(n, j) * stirling1_signed(j, k) for j in range(k, n + 1)), delta(n, k)
        # x(x-1)...(x-n+1) = sum_k s1(n,k) x^k, coefficient of x^k
        yield n, k, stirling1_signed(n, k), falling_coeffs(n)[k]
        # x^n = sum_j s2(n,j) falling(x,j), coefficient of x^k
        yield n, k, sum(stirling2(n, j) * falling_coeffs(j)[k] for j in range(k, n + 1)), delta(n, k)


def _lah_self_inverse(nmax, kmax, rng):
    for n, k in _triangle(nmax, kmax):
        yield n, k, sum(lah_signed(n, j) * lah_signed(j, k) for j in range(k, n + 1)), delta(n, k)


def _lah_by_stirling(nmax, kmax, rng):
    for n, k in _triangle(nmax, kmax):
        lhs = sum((-1) ** j * stirling1_signed(n, j) * stirling2(j, k) for j in range(k, n + 1))
        yield n, k, lhs, lah_signed(n, k)
        # falling(-x,n) = (-1)^n rising(x,n) = sum_j l(n,j) falling(x,j), coefficient of x^k
        lhs = (-1) ** n * rising_coeffs(n)[k]
        yield n, k, lhs, sum(lah_signed(n, j) * falling_coeffs(j)[k] for j in range(k, n + 1))


def _conversions(nmax, kmax, rng):
    for n, k in _triangle(nmax, kmax):
        yield n, k, lower_factorial_direct(n, k), lower_from_potential(n, k)
        yield n, k, potential_from_lower(n, k), potential(n, k)
        yield n, k, upper_factorial_direct(n, k), upper_from_potential(n, k)


def _prop31i(nmax, kmax, rng):
    for n, k in _triangle(nmax, kmax):
        yield n, k, upper(n, k), upper_from_lower(n, k)


def _prop31ii(nmax, kmax, rng):
    for n, k in _triangle(nmax, kmax):
        yield n, k, lower(n, k), lower_from_upper(n, k)


def _potential_ones(nmax, kmax, rng):
    for n, k in _triangle(nmax, kmax):
        yield n, k, potential(n, k).eval_all_ones(), k ** n


def _bell_ones(nmax, kmax, rng):
    for n, k in _triangle(nmax, kmax):
        yield n, k, bell(n, k).eval_all_ones(), stirling2(n, k)
        # recurrence against the diophantine sum
        yield n, k, bell_recurrence(n, k), bell_bruteforce(n, k)


def _a_ones(nmax, kmax, rng):
    for n, k in _triangle(nmax, kmax):
        yield n, k, abell(n, k).eval_all_ones(), stirling1_signed(n, k)


def _upper_assoc_spec(nmax, kmax, rng):
    for n, k in _triangle(nmax, kmax, 1, 1):
        yield n, k, upper(n, k).eval_all_ones(), numfam.upper_assoc(n, k)


def _lower_assoc_spec(nmax, kmax, rng):
    for n, k in _triangle(nmax, kmax, 1, 1):
        yield n, k, lower(n, k).eval_all_ones(), numfam.lower_assoc(n, k)


def _psw1(nmax, kmax, rng):
    for n, k in _rectangle(nmax, kmax):
        yield n, k, numfam.power_sum_direct(numfam.WeightScheme.ONES, n, k), numfam.psw1_rhs(n, k)
        for j in range(1, k + 1):
            yield n, k, numfam.upper_sum(numfam.WeightScheme.ONES, k, j), numfam.sum_rule_ones(k, j)
        for scheme in numfam.WeightScheme:
            yield n, k, numfam.power_sum_direct(scheme, n, k), numfam.power_sum_reduce(scheme, n, k)


def _prop42(nmax, kmax, rng):
    for n, k in _rectangle(nmax, kmax):
        yield n, k, numfam.upper_assoc(n, k), numfam.prop42_rhs(n, k)
        for j in range(1, k + 1):
            yield n, k, numfam.upper_sum(numfam.WeightScheme.CYCLE, k, j), cycle(k + 1, j + 1)


def _prop44(nmax, kmax, rng):
    for n, k in _rectangle(nmax, kmax):
        yield n, k, numfam.lower_assoc(n, k), numfam.prop44_rhs(n, k)


def _prf1(nmax, kmax, rng):
    for k in range(1, kmax + 1):
        for j in range(k):
            yield k, j, numfam.prf1_lhs(k, j), numfam.prf1_rhs(k, j)
        for j in range(1, k + 1):
            lhs = numfam.upper_sum(numfam.WeightScheme.STIRLING1_SIGNED, k, j)
            yield k, j, lhs, stirling1_signed(k - 1, j - 1) + stirling1_signed(k - 1, j)


def _faa_di_bruno(nmax, kmax, rng):
    for sample in range(20):
        f, g = random_pair(rng, nmax)
        for n in range(nmax + 1):
            report = verify_faa_di_bruno(f, g, n)
            if report.passed:
                yield n, sample, 0, 0
            else:
                ce = report.counterexample
                yield n, sample, ce.lhs, ce.rhs


def _invertible_samples(rng, order: int) -> List[Series]:
    return [Series.geometric_x(order)] + [
        random_series(rng, order, constant=False, invertible=True) for _ in range(5)
    ]


def _coeff_cases(report: IdentityReport, n: int, k: int) -> Case:
    if report.passed:
        return n, k, 0, 0
    return n, k, report.counterexample.lhs, report.counterexample.rhs


def _bell_coeff(nmax, kmax, rng):
    for n, k in _triangle(nmax, kmax, 1, 1):
        # X_j = j! is the Taylor data of x/(1-x)
        value = bell(n, k).evaluate({j: factorial(j) for j in range(1, n + 1)})
        yield n, k, value, lah_unsigned(n, k)
    for g in _invertible_samples(rng, nmax):
        for n, k in _triangle(nmax, kmax, 1, 1):
            yield _coeff_cases(verify_bell_coeff(g, n, k), n, k)


def _a_coeff(nmax, kmax, rng):
    for n, k in _triangle(nmax, kmax, 1, 1):
        # inverse of x/(1-x) is x/(1+x)
        value = abell(n, k).evaluate({j: factorial(j) for j in range(1, n + 1)})
        yield n, k, value, (-1) ** k * lah_signed(n, k)
    for g in _invertible_samples(rng, nmax):
        ginv = invert_composition(g)
        for n, k in _triangle(nmax, kmax, 1, 1):
            yield _coeff_cases(verify_a_coeff(g, n, k, inverse=ginv), n, k)


def _closing(n: int, shifts: Optional[Tuple[int, ...]] = None) -> Checker:
    def check(nmax, kmax, rng):
        printed = numfam.PRINTED_CLOSING_COEFFS[n]
        derived = numfam.closing_identity_coeffs(n)
        yield n, 0, derived, printed
        for k in range(2, kmax + 1):
            yield n, k, numfam.closing_identity_lhs(n, k), numfam.closing_identity_rhs(printed, k, shifts)
    return check


_ALL = [
    Identity("ab-inversion", POLY, (10, 10), _ab_inversion,
             "sum_j A(n,j) B(j,k) = delta(n,k)"),
    Identity("stirling-inversion", NUMBER, (30, 30), _stirling_inversion,
             "s1 and s2 are inverse triangles; both falling-factorial expansions"),
    Identity("lah-self-inverse", NUMBER, (30, 30), _lah_self_inverse,
             "sum_j l(n,j) l(j,k) = delta(n,k)"),
    Identity("lah-by-stirling", NUMBER, (30, 30), _lah_by_stirling,
             "sum_j (-1)^j s1(n,j) s2(j,k) = l(n,k); falling(-x,n) = sum l(n,k) falling(x,k)"),
    Identity("eq6-eq7-roundtrip", POLY, (8, 8), _conversions,
             "lower/upper factorial polynomials: direct vs Stirling conversions, and back"),
    Identity("prop31i", POLY, (8, 8), _prop31i,
             "upper(n,k) = (-1)^k sum_j l(k,j) lower(n,j)"),
    Identity("prop31ii", POLY, (8, 8), _prop31ii,
             "lower(n,k) = sum_j (-1)^j l(k,j) upper(n,j)"),
    Identity("potential-ones", POLY, (10, 10), _potential_ones, "P(n,k)(1,...,1) = k^n"),
    Identity("bell-ones", POLY, (10, 10), _bell_ones,
             "B(n,k)(1,...,1) = s2(n,k); recurrence = diophantine sum"),
    Identity("a-ones", POLY, (10, 10), _a_ones, "A(n,k)(1,...,1) = s1(n,k)"),
    Identity("upper-assoc-spec", POLY, (8, 8), _upper_assoc_spec,
             "upper(n,k)(1,...,1) = sum_r c(k,r) r^n"),
    Identity("lower-assoc-spec", POLY, (8, 8), _lower_assoc_spec,
             "lower(n,k)(1,...,1) = sum_r s1(k,r) r^n"),
    Identity("psw1", NUMBER, (20, 20), _psw1,
             "1^n + ... + k^n closed form; weighted power-sum reduction"),
    Identity("prop42", NUMBER, (20, 20), _prop42,
             "sum_r c(k,r) r^n = sum_j j! S(n,j) c(k+1,j+1)"),
    Identity("prop44", NUMBER, (20, 20), _prop44,
             "sum_r s1(k,r) r^n = sum_j (-1)^(k-j) j! S(n,j) (c(k-1,j-1) - c(k-1,j))"),
    Identity("prf1", NUMBER, (25, 25), _prf1,
             "sum_{r>j} C(r,j) s1(k,r) = k s1(k-1,j)"),
    Identity("faa-di-bruno", SERIES, (8, 8), _faa_di_bruno,
             "D^n(f o g)(0) = sum_k f_k B(n,k)(g_1, ...) on random series"),
    Identity("bell-coeff", SERIES, (8, 8), _bell_coeff,
             "B(n,k)(g_1, ...) = n! [x^n] g^k/k!"),
    Identity("a-coeff", SERIES, (8, 8), _a_coeff,
             "A(n,k)(g_1, ...) = n! [x^n] ginv^k/k!"),
    Identity("closing-n1", NUMBER, (20, 20), _closing(1),
             "sum_r (-1)^r c(k,r) r = c(k-1,1)"),
    Identity("closing-n2", NUMBER, (20, 20), _closing(2),
             "sum_r (-1)^r c(k,r) r^2 = 3c(k-1,1) - 2c(k-1,2)"),
    Identity("closing-n3", NUMBER, (20, 20), _closing(3),
             "sum_r (-1)^r c(k,r) r^3 = 7c(k-1,1) - 12c(k-1,2) + 6c(k-1,3)"),
    Identity("closing-n3-literal", NUMBER, (20, 20), _closing(3, (1, 1, 10)),
             "the n=3 closing identity with c(k-10,3) read literally (expected to fail)",
             in_default=False),
]

IDENTITIES: Dict[str, Identity] = {ident.name: ident for ident in _ALL}
DEFAULT_IDENTITIES: List[str] = [ident.name for ident in _ALL if ident.in_default]


def _render(value: object) -> str:
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(str(v) for v in value) + ")"
    return str(value)


def run_identity(name: str, nmax: Optional[int] = None, kmax: Optional[int] = None,
                 seed: int = 0) -> IdentityReport:
    try:
        ident = IDENTITIES[name]
    except KeyError:
        raise UnknownIdentityError(name) from None
    nmax = ident.default_range[0] if nmax is None else nmax
    kmax = ident.default_range[1] if kmax is None else kmax
    limit = _limit_for(ident.kind)
    if nmax < 0 or kmax < 0:
        raise LimitError("nmax and kmax must be non-negative")
    if nmax > limit or kmax > limit:
        raise LimitError(f"{name}: range ({nmax}, {kmax}) exceeds the limit {limit} for {ident.kind} identities")

    rng = random.Random(seed)
    start = time.perf_counter()
    checked = 0
    counterexample = None
    for n, k, lhs, rhs in ident.check(nmax, kmax, rng):
        checked += 1
        if lhs != rhs:
            counterexample = Counterexample(n, k, _render(lhs), _render(rhs))
            break
    elapsed = time.perf_counter() - start
    return IdentityReport(name, (nmax, kmax), counterexample is None, counterexample, checked, elapsed)


def run_all(nmax: Optional[int] = None, kmax: Optional[int] = None, seed: int = 0,
            names: Optional[List[str]] = None) -> List[IdentityReport]:
    return [run_identity(name, nmax, kmax, seed) for name in (names or DEFAULT_IDENTITIES)]
