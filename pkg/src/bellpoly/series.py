"""Truncated formal power series with exact rational coefficients.

Coefficients are stored as plain coefficients of x^n; ``taylor_coeff``
multiplies by n! to give D^n(f)(0). Binary operations truncate to the
smaller order.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, List, Sequence, Union

from .bell import abell, bell
from .report import Counterexample, IdentityReport

Number = Union[int, Fraction]

__all__ = [
    "Series",
    "derive",
    "compose",
    "taylor_coeff",
    "invert_composition",
    "verify_faa_di_bruno",
    "verify_bell_coeff",
    "verify_a_coeff",
    "taylor_assignment",
    "random_series",
    "random_pair",
]


class Series:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise ValueError("a series needs at least one coefficient")
        self.coeffs: List[Fraction] = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def identity(cls, order: int) -> "Series":
        return cls([0, 1], order)

    @classmethod
    def constant(cls, c: Number, order: int) -> "Series":
        return cls([c], order)

    @classmethod
    def geometric_x(cls, order: int, ratio: Number = 1) -> "Series":
        """x / (1 - ratio*x)."""
        return cls([0] + [Fraction(ratio) ** (m - 1) for m in range(1, order + 1)], order)

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs, min(order, self.order))

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"Series({[str(c) for c in self.coeffs]})"

    def __add__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])])

    def __sub__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series([a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])])

    def __neg__(self) -> "Series":
        return Series([-c for c in self.coeffs])

    def __mul__(self, other: Union["Series", Number]) -> "Series":
        if isinstance(other, (int, Fraction)):
            return Series([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return Series([sum((a[i] * b[m - i] for i in range(m + 1)), Fraction(0)) for m in range(n + 1)])

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Series":
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = Series.constant(1, self.order)
        for _ in range(e):
            result = result * self
        return result


def derive(f: Series) -> Series:
    if f.order < 1:
        raise ValueError("cannot differentiate a series of order 0")
    return Series([m * f.coeffs[m] for m in range(1, f.order + 1)])


def compose(f: Series, g: Series) -> Series:
    """f(g(x)) truncated to the common order; g must have zero constant term."""
    if g.coeffs[0] != 0:
        raise ValueError("inner series must have zero constant term")
    n = min(f.order, g.order)
    g = g.truncate(n)
    acc = Series.constant(f.coeffs[n], n)
    for m in range(n - 1, -1, -1):
        acc = acc * g
        acc.coeffs[0] += f.coeffs[m]
    return acc


def taylor_coeff(f: Series, n: int) -> Fraction:
    if n < 0 or n > f.order:
        raise ValueError(f"index {n} outside series of order {f.order}")
    return factorial(n) * f.coeffs[n]


def invert_composition(g: Series) -> Series:
    """Compositional inverse h with g(h(x)) = h(g(x)) = x, solved one coefficient at a time."""
    if g.coeffs[0] != 0:
        raise ValueError("series with nonzero constant term is not invertible")
    if g.order < 1 or g.coeffs[1] == 0:
        raise ValueError("series with zero linear coefficient is not invertible")
    n = g.order
    g1 = g.coeffs[1]
    h = [Fraction(0), 1 / g1] + [Fraction(0)] * (n - 1)
    for m in range(2, n + 1):
        # [x^m] g(h) = g1*h_m + (terms in h_1..h_{m-1}); make it vanish
        residual = compose(g, Series(h[: m + 1])).coeffs[m]
        h[m] = -residual / g1
    return Series(h)


def taylor_assignment(g: Series) -> dict:
    """Map X_j -> g_j = D^j(g)(0) for j = 1..order."""
    return {j: taylor_coeff(g, j) for j in range(1, g.order + 1)}


def _fmt(x: Fraction) -> str:
    return str(x)


def verify_faa_di_bruno(f: Series, g: Series, n: int) -> IdentityReport:
    if g.coeffs[0] != 0:
        raise ValueError("g must have zero constant term")
    if n > min(f.order, g.order):
        raise ValueError("n exceeds the working order")
    lhs = taylor_coeff(compose(f, g), n)
    values = taylor_assignment(g)
    rhs = sum((taylor_coeff(f, k) * bell(n, k).evaluate(values) for k in range(n + 1)), Fraction(0))
    ok = lhs == rhs
    return IdentityReport("faa-di-bruno", (n, n), ok, None if ok else Counterexample(n, 0, _fmt(lhs), _fmt(rhs)), 1)


def _coeff_report(name: str, power_base: Series, poly_value: Fraction, n: int, k: int) -> IdentityReport:
    series_value = factorial(n) * (power_base ** k).coeffs[n] / factorial(k)
    ok = series_value == poly_value
    return IdentityReport(name, (n, k), ok,
                          None if ok else Counterexample(n, k, _fmt(poly_value), _fmt(series_value)), 1)


def verify_bell_coeff(g: Series, n: int, k: int) -> IdentityReport:
    """B(n,k) at X_j = g_j against n! [x^n] g^k / k!."""
    if not 0 <= k <= n <= g.order:
        raise ValueError("need 0 <= k <= n <= order")
    return _coeff_report("bell-coeff", g, bell(n, k).evaluate(taylor_assignment(g)), n, k)


def verify_a_coeff(g: Series, n: int, k: int, inverse: Series | None = None) -> IdentityReport:
    """A(n,k) at X_j = g_j against n! [x^n] ginv^k / k!; pass ``inverse`` to reuse a computed ginv."""
    if not 1 <= k <= n <= g.order:
        raise ValueError("need 1 <= k <= n <= order")
    ginv = invert_composition(g) if inverse is None else inverse
    return _coeff_report("a-coeff", ginv, abell(n, k).evaluate(taylor_assignment(g)), n, k)


def random_series(rng, order: int, *, constant: bool = True, invertible: bool = False) -> Series:
    """Coefficients num/den with num in [-9, 9], den in [1, 9]."""
    coeffs = []
    for m in range(order + 1):
        num = rng.randint(-9, 9)
        if m == 1 and invertible:
            while num == 0:
                num = rng.randint(-9, 9)
        coeffs.append(Fraction(num, rng.randint(1, 9)))
    if not constant:
        coeffs[0] = Fraction(0)
    return Series(coeffs)


def random_pair(rng, order: int) -> Sequence[Series]:
    return random_series(rng, order), random_series(rng, order, constant=False)
