"""Number families associated with the factorial polynomials, and the power-sum identities.

    upper_assoc(n, k) = sum_r c(k, r) r^n
    lower_assoc(n, k) = sum_r s1(k, r) r^n

A weighted power sum sum_r w_r r^n can be rewritten as

    sum_{j=1}^{min(k,n)} j! S(n,j) sum_{r=j}^{k} C(r,j) w_r,

and for the weight schemes below the inner sum has a closed form.
"""

from __future__ import annotations

import enum
from math import factorial
from typing import List, Sequence, Tuple, Union

from .combinat import binomial, cycle, stirling1_signed, stirling2

__all__ = [
    "WeightScheme",
    "weights",
    "upper_assoc",
    "lower_assoc",
    "power_sum_direct",
    "power_sum_reduce",
    "upper_sum",
    "sum_rule_ones",
    "psw1_rhs",
    "prop42_rhs",
    "prop44_rhs",
    "prf1_lhs",
    "prf1_rhs",
    "closing_identity_coeffs",
    "closing_identity_lhs",
    "closing_identity_rhs",
    "PRINTED_CLOSING_COEFFS",
]


class WeightScheme(enum.Enum):
    ONES = "ones"
    CYCLE = "cycle"
    STIRLING1_SIGNED = "stirling1"


Weights = Union[WeightScheme, Sequence[int]]

# reference values for n = 1, 2, 3 (multipliers of c(k-1, 1), c(k-1, 2), c(k-1, 3))
PRINTED_CLOSING_COEFFS = {1: (1,), 2: (3, -2), 3: (7, -12, 6)}


def _need_positive(**kwargs: int) -> None:
    for name, value in kwargs.items():
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")


def weights(scheme: Weights, k: int) -> List[int]:
    """Weights w_1..w_k (index 0 of the result is w_1). Custom weights are passed as a sequence."""
    if isinstance(scheme, WeightScheme):
        if scheme is WeightScheme.ONES:
            return [1] * k
        if scheme is WeightScheme.CYCLE:
            return [cycle(k, r) for r in range(1, k + 1)]
        return [stirling1_signed(k, r) for r in range(1, k + 1)]
    ws = [int(w) for w in scheme]
    if len(ws) != k:
        raise ValueError(f"custom weights need exactly {k} entries, got {len(ws)}")
    return ws


def power_sum_direct(scheme: Weights, n: int, k: int) -> int:
    ws = weights(scheme, k)
    return sum(w * r ** n for r, w in enumerate(ws, start=1))


def upper_sum(scheme: Weights, k: int, j: int) -> int:
    """Inner sum sum_{r=j}^{k} C(r, j) w_r."""
    ws = weights(scheme, k)
    return sum(binomial(r, j) * ws[r - 1] for r in range(max(j, 1), k + 1))


def power_sum_reduce(scheme: Weights, n: int, k: int) -> int:
    """Right-hand side of the power-sum reduction; equals power_sum_direct."""
    _need_positive(n=n, k=k)
    ws = weights(scheme, k)
    total = 0
    for j in range(1, min(k, n) + 1):
        inner = sum(binomial(r, j) * ws[r - 1] for r in range(j, k + 1))
        total += factorial(j) * stirling2(n, j) * inner
    return total


def upper_assoc(n: int, k: int) -> int:
    _need_positive(n=n)
    if k < 0:
        raise ValueError("k must be >= 0")
    return sum(cycle(k, r) * r ** n for r in range(1, k + 1))


def lower_assoc(n: int, k: int) -> int:
    _need_positive(n=n)
    if k < 0:
        raise ValueError("k must be >= 0")
    return sum(stirling1_signed(k, r) * r ** n for r in range(1, k + 1))


def sum_rule_ones(k: int, j: int) -> int:
    _need_positive(k=k, j=j)
    if j > k:
        raise ValueError(f"j must not exceed k, got j={j}, k={k}")
    return binomial(k + 1, j + 1)


def psw1_rhs(n: int, k: int) -> int:
    """Closed form of 1^n + 2^n + ... + k^n."""
    _need_positive(n=n, k=k)
    return sum(factorial(j) * stirling2(n, j) * binomial(k + 1, j + 1) for j in range(1, min(k, n) + 1))


def prop42_rhs(n: int, k: int) -> int:
    _need_positive(n=n, k=k)
    return sum(factorial(j) * stirling2(n, j) * cycle(k + 1, j + 1) for j in range(1, min(k, n) + 1))


def prop44_rhs(n: int, k: int) -> int:
    _need_positive(n=n, k=k)
    total = 0
    for j in range(1, min(k, n) + 1):
        term = factorial(j) * stirling2(n, j) * (cycle(k - 1, j - 1) - cycle(k - 1, j))
        total += -term if (k - j) % 2 else term
    return total


def prf1_lhs(k: int, j: int) -> int:
    """sum_{r=j+1}^{k} C(r, j) s1(k, r); equals k s1(k-1, j)."""
    _need_positive(k=k)
    if not 0 <= j < k:
        raise ValueError(f"need 0 <= j < k, got j={j}, k={k}")
    return sum(binomial(r, j) * stirling1_signed(k, r) for r in range(j + 1, k + 1))


def prf1_rhs(k: int, j: int) -> int:
    _need_positive(k=k)
    return k * stirling1_signed(k - 1, j)


def closing_identity_coeffs(n: int) -> Tuple[int, ...]:
    """Multipliers of c(k-1, 1..n) in sum_r (-1)^r c(k, r) r^n, valid for k >= 2.

    Collected from the lower-family closed form: the multiplier of c(k-1, i)
    is (-1)^(i+1) ((i+1)! S(n, i+1) + i! S(n, i)).
    """
    if n not in (1, 2, 3):
        raise ValueError("closing identities exist for n = 1, 2, 3 only")
    out = []
    for i in range(1, n + 1):
        c = factorial(i + 1) * stirling2(n, i + 1) + factorial(i) * stirling2(n, i)
        out.append(c if i % 2 else -c)
    return tuple(out)


def closing_identity_lhs(n: int, k: int) -> int:
    return sum((-1) ** r * cycle(k, r) * r ** n for r in range(1, k + 1))


def closing_identity_rhs(coeffs: Sequence[int], k: int, shifts: Sequence[int] | None = None) -> int:
    """sum_i coeffs[i-1] c(k - shift_i, i); shift defaults to 1 and c(m, .) = 0 for m < 0."""
    shifts = shifts or [1] * len(coeffs)
    total = 0
    for i, (c, s) in enumerate(zip(coeffs, shifts), start=1):
        if k - s >= 0:
            total += c * cycle(k - s, i)
    return total
