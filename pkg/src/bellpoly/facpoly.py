"""Potential polynomials and lower/upper factorial polynomials.

The potential polynomial P(n,k) is the Faa di Bruno polynomial of x^k,

    P(n,k) = sum_j falling(k, j) X0^(k-j) B(n,j),      k any integer.

The lower (upper) factorial polynomial is the Faa di Bruno polynomial of the
falling (rising) factorial power of order k. The ``*_direct`` builders expand
that power into monomials by straight multiplication, differentiate it j
times and substitute X0; the other builders go through the Stirling and Lah
conversion formulas. Tests compare the routes.
"""

from __future__ import annotations

from functools import lru_cache
from typing import List, Sequence

from .bell import bell
from .combinat import cycle, falling, falling_coeffs, lah_signed, rising_coeffs, stirling1_signed, stirling2
from .polyring import Polynomial
from .table import TriangularTable

__all__ = [
    "potential",
    "faa_di_bruno_poly",
    "lower_factorial_direct",
    "upper_factorial_direct",
    "lower_from_potential",
    "upper_from_potential",
    "potential_from_lower",
    "upper_from_lower",
    "lower_from_upper",
    "lower",
    "upper",
    "lower_table",
    "upper_table",
]


def _check(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError(f"indices must be non-negative, got ({n}, {k})")


@lru_cache(maxsize=None)
def potential(n: int, k: int) -> Polynomial:
    if n < 0:
        raise ValueError("n must be >= 0")
    acc = Polynomial()
    for j in range(n + 1):
        c = falling(k, j)
        if c:
            acc = acc + c * bell(n, j).mul_monomial({0: k - j})
    return acc


def faa_di_bruno_poly(coeffs: Sequence[int], n: int) -> Polynomial:
    """Faa di Bruno polynomial of the univariate polynomial sum_r coeffs[r] x^r.

    Returns sum_j D^j(f)(X0) B(n,j), with D^j(f) taken term by term.
    """
    acc = Polynomial()
    for j in range(n + 1):
        # D^j x^r = falling(r, j) x^(r-j)
        deriv = Polynomial({((0, r - j),) if r != j else (): c * falling(r, j)
                            for r, c in enumerate(coeffs) if r >= j and c})
        if deriv:
            acc = acc + deriv * bell(n, j)
    return acc


def lower_factorial_direct(n: int, k: int) -> Polynomial:
    _check(n, k)
    return faa_di_bruno_poly(falling_coeffs(k), n)


def upper_factorial_direct(n: int, k: int) -> Polynomial:
    _check(n, k)
    return faa_di_bruno_poly(rising_coeffs(k), n)


def lower_from_potential(n: int, k: int) -> Polynomial:
    _check(n, k)
    acc = Polynomial()
    for r in range(k + 1):
        acc = acc + stirling1_signed(k, r) * potential(n, r)
    return acc


def upper_from_potential(n: int, k: int) -> Polynomial:
    _check(n, k)
    acc = Polynomial()
    for r in range(k + 1):
        acc = acc + cycle(k, r) * potential(n, r)
    return acc


@lru_cache(maxsize=None)
def lower(n: int, k: int) -> Polynomial:
    return lower_factorial_direct(n, k)


@lru_cache(maxsize=None)
def upper(n: int, k: int) -> Polynomial:
    return upper_factorial_direct(n, k)


def potential_from_lower(n: int, k: int) -> Polynomial:
    _check(n, k)
    acc = Polynomial()
    for r in range(k + 1):
        acc = acc + stirling2(k, r) * lower(n, r)
    return acc


def upper_from_lower(n: int, k: int) -> Polynomial:
    _check(n, k)
    acc = Polynomial()
    for j in range(k + 1):
        acc = acc + lah_signed(k, j) * lower(n, j)
    return acc if k % 2 == 0 else -acc


def lower_from_upper(n: int, k: int, upper_values: Sequence[Polynomial] | None = None) -> Polynomial:
    """Signed Lah combination of upper(n, 0..k); ``upper_values`` overrides the table."""
    _check(n, k)
    values: List[Polynomial] = (list(upper_values) if upper_values is not None
                                else [upper(n, j) for j in range(k + 1)])
    acc = Polynomial()
    for j in range(k + 1):
        c = lah_signed(k, j)
        acc = acc + (c if j % 2 == 0 else -c) * values[j]
    return acc


def lower_table(nmax: int, kmax: int | None = None) -> TriangularTable:
    return TriangularTable.build(lower, nmax, kmax)


def upper_table(nmax: int, kmax: int | None = None) -> TriangularTable:
    return TriangularTable.build(upper, nmax, kmax)
