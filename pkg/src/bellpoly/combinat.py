"""Exact integer combinatorics: binomials, factorial powers, Stirling and Lah numbers.

All values are Python ints, so nothing overflows. Stirling triangles are
memoized row by row behind a lock; callers only ever see pure functions.
"""

from __future__ import annotations

import enum
import threading
from math import comb, factorial
from typing import Callable, List, Sequence

__all__ = [
    "NumberFamilyId",
    "binomial",
    "falling",
    "rising",
    "stirling2",
    "stirling1_signed",
    "cycle",
    "lah_signed",
    "lah_unsigned",
    "delta",
    "falling_coeffs",
    "rising_coeffs",
    "family_value",
]


def _check_nonneg(**kwargs: int) -> None:
    for name, value in kwargs.items():
        if value < 0:
            raise ValueError(f"{name} must be >= 0, got {value}")


def delta(n: int, k: int) -> int:
    return 1 if n == k else 0


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero outside 0 <= k <= n."""
    _check_nonneg(n=n)
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def falling(x: int, j: int) -> int:
    """Falling factorial power x(x-1)...(x-j+1); x may be negative."""
    _check_nonneg(j=j)
    out = 1
    for i in range(j):
        out *= x - i
    return out


def rising(x: int, j: int) -> int:
    """Rising factorial power x(x+1)...(x+j-1)."""
    _check_nonneg(j=j)
    out = 1
    for i in range(j):
        out *= x + i
    return out


class _Triangle:
    """Lower-triangular integer table grown on demand from a row recurrence."""

    def __init__(self, first_row: Sequence[int], step: Callable[[int, List[int]], List[int]]):
        self._rows: List[List[int]] = [list(first_row)]
        self._step = step
        self._lock = threading.Lock()

    def row(self, n: int) -> List[int]:
        rows = self._rows
        if n >= len(rows):
            with self._lock:
                while len(rows) <= n:
                    m = len(rows)
                    rows.append(self._step(m, rows[m - 1]))
        return rows[n]

    def __call__(self, n: int, k: int) -> int:
        if k > n:
            return 0
        return self.row(n)[k]


def _stirling2_step(n: int, prev: List[int]) -> List[int]:
    # S(n,k) = k S(n-1,k) + S(n-1,k-1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = (k * prev[k] if k < n else 0) + prev[k - 1]
    return row


def _stirling1_step(n: int, prev: List[int]) -> List[int]:
    # s1(n,k) = s1(n-1,k-1) - (n-1) s1(n-1,k)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = prev[k - 1] - ((n - 1) * prev[k] if k < n else 0)
    return row


_S2 = _Triangle([1], _stirling2_step)
_S1 = _Triangle([1], _stirling1_step)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind (subset number)."""
    _check_nonneg(n=n, k=k)
    return _S2(n, k)


def stirling1_signed(n: int, k: int) -> int:
    """Signed Stirling number of the first kind, the coefficient of x^k in x(x-1)...(x-n+1)."""
    _check_nonneg(n=n, k=k)
    return _S1(n, k)


def cycle(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind (cycle number)."""
    _check_nonneg(n=n, k=k)
    return -_S1(n, k) if (n - k) % 2 else _S1(n, k)


def lah_signed(n: int, k: int) -> int:
    """Signed Lah number (-1)^n n!/k! C(n-1, k-1), with l(0,0) = 1.

    These connect the bases through falling(-x, n) = sum_k l(n, k) falling(x, k),
    so rising(x, n) = sum_k |l(n, k)| falling(x, k).
    """
    _check_nonneg(n=n, k=k)
    if n == 0 or k == 0:
        return delta(n, k)
    if k > n:
        return 0
    value = factorial(n) // factorial(k) * comb(n - 1, k - 1)
    return -value if n % 2 else value


def lah_unsigned(n: int, k: int) -> int:
    return abs(lah_signed(n, k))


def falling_coeffs(n: int) -> List[int]:
    """Coefficients c_0..c_n of x(x-1)...(x-n+1), expanded by direct multiplication."""
    _check_nonneg(n=n)
    coeffs = [1]
    for i in range(n):
        # multiply by (x - i)
        nxt = [0] * (len(coeffs) + 1)
        for r, c in enumerate(coeffs):
            nxt[r + 1] += c
            nxt[r] -= i * c
        coeffs = nxt
    return coeffs


def rising_coeffs(n: int) -> List[int]:
    """Coefficients c_0..c_n of x(x+1)...(x+n-1), expanded by direct multiplication."""
    _check_nonneg(n=n)
    coeffs = [1]
    for i in range(n):
        nxt = [0] * (len(coeffs) + 1)
        for r, c in enumerate(coeffs):
            nxt[r + 1] += c
            nxt[r] += i * c
        coeffs = nxt
    return coeffs


class NumberFamilyId(enum.Enum):
    STIRLING1_SIGNED = "stirling1"
    STIRLING2 = "stirling2"
    CYCLE = "cycle"
    LAH_SIGNED = "lah"
    LAH_UNSIGNED = "lah-unsigned"

    @property
    def generator(self) -> Callable[[int, int], int]:
        return _GENERATORS[self]


_GENERATORS = {
    NumberFamilyId.STIRLING1_SIGNED: stirling1_signed,
    NumberFamilyId.STIRLING2: stirling2,
    NumberFamilyId.CYCLE: cycle,
    NumberFamilyId.LAH_SIGNED: lah_signed,
    NumberFamilyId.LAH_UNSIGNED: lah_unsigned,
}


def family_value(family: NumberFamilyId, n: int, k: int) -> int:
    return family.generator(n, k)
