"""Partial Bell polynomials B(n,k) and their matrix inverse A(n,k).

``bell_bruteforce`` sums over multiplicity sequences (r1, r2, ...) with
sum r_j = k and sum j*r_j = n. ``bell_recurrence`` is the fast path used by
everything else; the two must agree exactly.

A(n,k) is obtained by solving sum_{j=k}^{n} A(n,j) B(j,k) = delta(n,k)
row by row. It is Laurent in X1 because B(k,k) = X1^k.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Dict, Iterator, List, Tuple

from .combinat import binomial, delta
from .polyring import Polynomial
from .table import TriangularTable

__all__ = [
    "ConstructionError",
    "partitions_exact",
    "bell_bruteforce",
    "bell_recurrence",
    "bell",
    "bell_table",
    "a_row",
    "a_table",
    "abell",
    "is_isobaric",
    "is_homogeneous",
]


class ConstructionError(RuntimeError):
    """A structural assertion about a generated polynomial failed."""


def _check_nk(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError(f"indices must be non-negative, got ({n}, {k})")
    if k > n:
        raise ValueError(f"k must not exceed n, got ({n}, {k})")


def partitions_exact(n: int, k: int, largest: int | None = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of n into exactly k parts, parts non-increasing, in reverse lex order."""
    if largest is None:
        largest = n
    if k == 0:
        if n == 0:
            yield ()
        return
    # the remaining k-1 parts are each >= 1 and <= first part
    for first in range(min(largest, n - (k - 1)), 0, -1):
        if first * k < n:
            break
        for rest in partitions_exact(n - first, k - 1, first):
            yield (first,) + rest


def bell_bruteforce(n: int, k: int) -> Polynomial:
    _check_nk(n, k)
    nf = factorial(n)
    terms: Dict[tuple, int] = {}
    for parts in partitions_exact(n, k):
        mult: Dict[int, int] = {}
        for p in parts:
            mult[p] = mult.get(p, 0) + 1
        denom = 1
        for j, r in mult.items():
            denom *= factorial(r) * factorial(j) ** r
        coeff, rem = divmod(nf, denom)
        if rem:
            raise ConstructionError(f"non-integral multinomial {nf}/{denom} in B({n},{k})")
        terms[tuple(sorted(mult.items()))] = coeff
    return Polynomial(terms)


@lru_cache(maxsize=None)
def bell_recurrence(n: int, k: int) -> Polynomial:
    """B(n,k) = sum_{j=1}^{n-k+1} C(n-1, j-1) X_j B(n-j, k-1)."""
    _check_nk(n, k)
    if k == 0:
        return Polynomial.const(delta(n, 0))
    acc = Polynomial()
    for j in range(1, n - k + 2):
        acc = acc + binomial(n - 1, j - 1) * (Polynomial.var(j) * bell_recurrence(n - j, k - 1))
    return acc


def bell(n: int, k: int) -> Polynomial:
    return bell_recurrence(n, k)


def bell_table(nmax: int) -> TriangularTable:
    return TriangularTable.build(bell, nmax)


def is_homogeneous(p: Polynomial, degree: int) -> bool:
    return all(sum(e for _, e in mono) == degree for mono, _ in p.items())


def is_isobaric(p: Polynomial, weight: int) -> bool:
    return all(sum(v * e for v, e in mono) == weight for mono, _ in p.items())


def _check_a_entry(a: Polynomial, n: int, k: int) -> None:
    allowed = set(range(1, n - k + 2))
    stray = set(a.variables()) - allowed
    if stray:
        raise ConstructionError(f"A({n},{k}) involves unexpected variables {sorted(stray)}")
    # X1^(2n-k) * A(n,k) must be an ordinary polynomial
    if a.min_exponent(1) < -(2 * n - k):
        raise ConstructionError(f"A({n},{k}) has X1 power below -{2 * n - k}")


@lru_cache(maxsize=None)
def a_row(n: int) -> Tuple[Polynomial, ...]:
    """Row n of the inverse table, entries A(n,0..n)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    row: List[Polynomial] = [Polynomial()] * (n + 1)
    row[0] = Polynomial.const(delta(n, 0))
    if n == 0:
        return tuple(row)
    row[n] = Polynomial.var(1, -n)
    for k in range(n - 1, 0, -1):
        acc = Polynomial()
        for j in range(k + 1, n + 1):
            acc = acc + row[j] * bell(j, k)
        entry = (-acc).mul_monomial({1: -k})
        _check_a_entry(entry, n, k)
        row[k] = entry
    return tuple(row)


def abell(n: int, k: int) -> Polynomial:
    _check_nk(n, k)
    return a_row(n)[k]


def a_table(nmax: int) -> TriangularTable:
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    return TriangularTable.build(abell, nmax)
