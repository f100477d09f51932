"""Exact Laurent polynomials in one variable t over the rationals.

A polynomial is stored as a map {exponent: coefficient} with no zero
coefficients; exponents may be negative.  Coefficients are
fractions.Fraction, so all arithmetic (and in particular every valuation
read off by the fiber classifier) is exact.

The valuation of the zero polynomial is the +infinity sentinel
(math.inf), which orders above every integer.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Union[int, Fraction]

INF = math.inf


class LaurentPoly:
    """Finite Laurent polynomial sum_k c_k t^k with exact rational c_k."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Rational] | Iterable[tuple[int, Rational]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, Fraction] = {}
        for k, c in items:
            c = Fraction(c)
            if c:
                acc[int(k)] = acc.get(int(k), Fraction(0)) + c
        self._coeffs = {k: c for k, c in acc.items() if c}

    @classmethod
    def constant(cls, c: Rational) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def t_power(cls, k: int, c: Rational = 1) -> "LaurentPoly":
        return cls({k: c})

    def coefficient(self, k: int) -> Fraction:
        return self._coeffs.get(k, Fraction(0))

    def items(self):
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def valuation(self) -> int | float:
        """Least exponent with nonzero coefficient; INF for the zero polynomial."""
        if not self._coeffs:
            return INF
        return min(self._coeffs)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k (k may be negative)."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, Fraction(0)) + c
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, Fraction(0)) - c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self._coeffs.items()})

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({k: c * other for k, c in self._coeffs.items()})
        out: dict[int, Fraction] = {}
        for k1, c1 in self._coeffs.items():
            for k2, c2 in other._coeffs.items():
                k = k1 + k2
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of a general Laurent polynomial are not defined")
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "LaurentPoly(0)"
        terms = " + ".join(f"({c})*t^{k}" for k, c in self.items())
        return f"LaurentPoly({terms})"


def from_triples(triples: Iterable[Iterable[int]]) -> LaurentPoly:
    """Build a polynomial from [exponent, numerator, denominator] triples.

    This is the on-disk coefficient format consumed by the CLI model
    documents.
    """
    coeffs: dict[int, Fraction] = {}
    for triple in triples:
        e, num, den = triple
        coeffs[int(e)] = coeffs.get(int(e), Fraction(0)) + Fraction(int(num), int(den))
    return LaurentPoly(coeffs)
