"""Exact Laurent polynomial arithmetic and valuations."""

import math
from fractions import Fraction

import pytest

from torsorkit.laurent import LaurentPoly, from_triples


def test_zero_coefficients_dropped():
    p = LaurentPoly({0: 1, 2: 0, 3: Fraction(0)})
    assert p.items() == [(0, Fraction(1))]
    q = LaurentPoly([(1, 1), (1, -1)])
    assert q.is_zero()


def test_valuation():
    assert LaurentPoly({3: 1, 7: 2}).valuation() == 3
    assert LaurentPoly({-2: 1, 5: 1}).valuation() == -2
    assert LaurentPoly().valuation() == math.inf
    assert LaurentPoly().valuation() > 10**12  # sentinel orders above every integer


def test_arithmetic():
    t = LaurentPoly.t_power(1)
    p = LaurentPoly.constant(2) + t  # 2 + t
    assert (p * p).items() == [(0, Fraction(4)), (1, Fraction(4)), (2, Fraction(1))]
    assert (p - p).is_zero()
    assert (-p).coefficient(0) == -2
    assert (3 * t).coefficient(1) == 3
    assert (p ** 3).coefficient(0) == 8
    assert (p ** 3).coefficient(3) == 1


def test_shift():
    p = LaurentPoly({6: 1, 7: Fraction(1, 2)})
    q = p.shift(-6)
    assert q.items() == [(0, Fraction(1)), (1, Fraction(1, 2))]
    assert p.shift(-6).shift(6) == p


def test_pow_rejects_negative():
    with pytest.raises(ValueError):
        LaurentPoly({0: 1, 1: 1}) ** -1


def test_from_triples():
    p = from_triples([[0, 2, 1], [3, 1, 1], [3, 1, 2]])
    assert p.coefficient(0) == 2
    assert p.coefficient(3) == Fraction(3, 2)
    assert from_triples([[1, -1, 3]]).coefficient(1) == Fraction(-1, 3)
