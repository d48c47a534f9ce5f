"""Sparse multivariate Laurent polynomials in X0, X1, X2, ... over the integers.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable,
with zero exponents dropped. Only X0 and X1 may carry negative exponents.
A polynomial maps monomials to nonzero int coefficients and is immutable.

Canonical text looks like ``3*X2^2 + 4*X1*X3`` or ``-X1^-3*X2``. Terms are
ordered by total degree (descending), then lexicographically ascending on
the exponent vector of X1, X2, ...; X0 never needs a separate tiebreak
because equal degree and equal X1.. exponents force equal X0 exponents.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

Monomial = Tuple[Tuple[int, int], ...]

LAURENT_VARS = frozenset({0, 1})

__all__ = [
    "Monomial",
    "Polynomial",
    "PolynomialError",
    "add",
    "mul",
    "scale",
    "eval_all_ones",
    "evaluate",
    "to_canonical_string",
    "parse",
]


class PolynomialError(ValueError):
    pass


def _check_monomial(mono: Monomial) -> None:
    prev = -1
    for var, exp in mono:
        if var <= prev:
            raise PolynomialError(f"monomial variables not strictly increasing: {mono}")
        if exp == 0:
            raise PolynomialError(f"zero exponent stored in {mono}")
        if exp < 0 and var not in LAURENT_VARS:
            raise PolynomialError(f"negative exponent on X{var}; only X0 and X1 may be Laurent")
        prev = var


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            e = ea + eb
            if e:
                out.append((va, e))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _mono_from_mapping(exps: Mapping[int, int]) -> Monomial:
    return tuple(sorted((int(v), int(e)) for v, e in exps.items() if e))


def _sort_key(mono: Monomial, width: int) -> tuple:
    dense = [0] * width
    for var, exp in mono:
        if var:
            dense[var - 1] = exp
    return (-sum(e for _, e in mono), dense)


class Polynomial:
    """Immutable sparse Laurent polynomial with int coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Monomial, int], Iterable[Tuple[Monomial, int]], None] = None):
        acc: Dict[Monomial, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mono, coeff in items:
                mono = tuple(mono)
                _check_monomial(mono)
                acc[mono] = acc.get(mono, 0) + int(coeff)
        self._terms = {m: c for m, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, int]) -> "Polynomial":
        # trusted constructor: terms already canonical and nonzero
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "Polynomial":
        return cls._raw({(): int(c)} if c else {})

    @classmethod
    def var(cls, index: int, exp: int = 1) -> "Polynomial":
        if index < 0:
            raise PolynomialError("variable index must be >= 0")
        return cls({((index, exp),) if exp else (): 1})

    @classmethod
    def monomial(cls, exps: Mapping[int, int], coeff: int = 1) -> "Polynomial":
        return cls({_mono_from_mapping(exps): coeff})

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> List[int]:
        return sorted({v for mono in self._terms for v, _ in mono})

    def coefficient(self, exps: Mapping[int, int]) -> int:
        return self._terms.get(_mono_from_mapping(exps), 0)

    def min_exponent(self, var: int) -> int:
        """Smallest exponent of X<var> over all terms (0 where absent); 0 for the zero polynomial."""
        return min((dict(m).get(var, 0) for m in self._terms), default=0)

    # arithmetic

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: Union["Polynomial", int]) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Union["Polynomial", int]) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: Union["Polynomial", int]) -> "Polynomial":
        if isinstance(other, int):
            return scale(other, self)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: Dict[Monomial, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = _mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return Polynomial._raw({m: c for m, c in out.items() if c})

    def __rmul__(self, other: int) -> "Polynomial":
        if isinstance(other, int):
            return scale(other, self)
        return NotImplemented

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            if len(self._terms) != 1:
                raise PolynomialError("negative powers only of monomials")
            (mono, c), = self._terms.items()
            if c not in (1, -1):
                raise PolynomialError("negative power of a non-unit coefficient")
            return Polynomial({tuple((v, x * e) for v, x in mono): c ** (-e)})
        result = Polynomial.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def mul_monomial(self, exps: Mapping[int, int]) -> "Polynomial":
        mono = _mono_from_mapping(exps)
        return Polynomial({_mono_mul(m, mono): c for m, c in self._terms.items()})

    # evaluation and rendering

    def eval_all_ones(self) -> int:
        return sum(self._terms.values())

    def evaluate(self, assignment: Mapping[int, Union[int, Fraction]]) -> Fraction:
        total = Fraction(0)
        for mono, c in self._terms.items():
            term = Fraction(c)
            for var, exp in mono:
                if var not in assignment:
                    raise PolynomialError(f"no value assigned to X{var}")
                value = Fraction(assignment[var])
                if exp < 0 and value == 0:
                    raise PolynomialError(f"X{var} = 0 at a negative power")
                term *= value ** exp
            total += term
        return total

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        width = max((v for m in self._terms for v, _ in m), default=0)
        return sorted(self._terms.items(), key=lambda item: _sort_key(item[0], width))

    def to_canonical_string(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (mono, c) in enumerate(self.sorted_terms()):
            factors = [f"X{v}" if e == 1 else f"X{v}^{e}" for v, e in mono]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if i == 0:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)

    def to_json(self) -> List[dict]:
        return [
            {"coeff": str(c), "exps": {str(v): e for v, e in mono}}
            for mono, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "Polynomial":
        return cls(
            (_mono_from_mapping({int(v): int(e) for v, e in item["exps"].items()}), int(item["coeff"]))
            for item in data
        )

    def __str__(self) -> str:
        return self.to_canonical_string()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_canonical_string()!r})"


_FACTOR_RE = re.compile(r"X(\d+)(?:\^(-?\d+))?\Z")


def _split_terms(text: str) -> List[Tuple[int, str]]:
    out: List[Tuple[int, str]] = []
    sign = 1
    buf = ""
    for i, ch in enumerate(text):
        # a '-' right after '^' is part of an exponent
        if ch in "+-" and not buf.rstrip().endswith("^"):
            if buf.strip():
                out.append((sign, buf.strip()))
                sign = 1
            buf = ""
            if ch == "-":
                sign = -sign
        else:
            buf += ch
    if buf.strip():
        out.append((sign, buf.strip()))
    return out


def parse(text: str) -> Polynomial:
    """Inverse of :func:`to_canonical_string`."""
    text = text.strip()
    if not text:
        raise PolynomialError("empty polynomial text")
    if text == "0":
        return Polynomial()
    acc: Dict[Monomial, int] = {}
    for sign, body in _split_terms(text):
        coeff = sign
        exps: Dict[int, int] = {}
        for factor in body.split("*"):
            factor = factor.strip()
            if factor.isdigit():
                coeff *= int(factor)
                continue
            m = _FACTOR_RE.match(factor)
            if not m:
                raise PolynomialError(f"cannot parse factor {factor!r} in {text!r}")
            var = int(m.group(1))
            exps[var] = exps.get(var, 0) + int(m.group(2) or 1)
        mono = _mono_from_mapping(exps)
        acc[mono] = acc.get(mono, 0) + coeff
    return Polynomial(acc)


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def scale(c: int, p: Polynomial) -> Polynomial:
    if not c:
        return Polynomial()
    return Polynomial._raw({m: c * v for m, v in p._terms.items()})


def eval_all_ones(p: Polynomial) -> int:
    """Value with every indeterminate set to 1, i.e. the coefficient sum."""
    return p.eval_all_ones()


def evaluate(p: Polynomial, assignment: Mapping[int, Union[int, Fraction]]) -> Fraction:
    return p.evaluate(assignment)


def to_canonical_string(p: Polynomial) -> str:
    return p.to_canonical_string()
