"""Exact rational elliptic-curve group law: the exact torsor test instance.

Short Weierstrass form y^2 = x^3 + a*x + b over Fraction.  Chord-tangent
addition with the point at infinity as identity; all arithmetic exact,
so slope heights may grow without corrupting comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import OffCurve, SingularCurve
from .torsor import TorsorInstance


@dataclass(frozen=True)
class CurvePoint:
    """Affine point (x, y) or the point at infinity (x = y = None)."""

    x: Optional[Fraction]
    y: Optional[Fraction]

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __repr__(self):
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = CurvePoint(None, None)


@dataclass(frozen=True)
class RationalCurve:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.discriminant() == 0:
            raise SingularCurve(f"y^2 = x^3 + {self.a}x + {self.b} is singular")

    def discriminant(self) -> Fraction:
        return -16 * (4 * self.a**3 + 27 * self.b**2)

    def contains(self, p: CurvePoint) -> bool:
        if p.is_infinity:
            return True
        return p.y * p.y == p.x**3 + self.a * p.x + self.b

    def point(self, x, y) -> CurvePoint:
        p = CurvePoint(Fraction(x), Fraction(y))
        if not self.contains(p):
            raise OffCurve(f"{p} is not on y^2 = x^3 + {self.a}x + {self.b}")
        return p


def _check_on_curve(E: RationalCurve, *pts: CurvePoint):
    for p in pts:
        if not E.contains(p):
            raise OffCurve(f"{p} is not on y^2 = x^3 + {E.a}x + {E.b}")


def ec_neg(P: CurvePoint, E: RationalCurve) -> CurvePoint:
    _check_on_curve(E, P)
    if P.is_infinity:
        return P
    return CurvePoint(P.x, -P.y)


def ec_add(P: CurvePoint, Q: CurvePoint, E: RationalCurve) -> CurvePoint:
    """Chord-tangent addition with identity at infinity."""
    _check_on_curve(E, P, Q)
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y == -Q.y:
            return INFINITY
        # tangent line (P == Q with y != 0)
        m = (3 * P.x * P.x + E.a) / (2 * P.y)
    else:
        m = (Q.y - P.y) / (Q.x - P.x)
    x3 = m * m - P.x - Q.x
    y3 = m * (P.x - x3) - P.y
    return CurvePoint(x3, y3)


def ec_scalar_mul(k: int, P: CurvePoint, E: RationalCurve) -> CurvePoint:
    """k*P by double-and-add; negative k via negation."""
    if k < 0:
        return ec_scalar_mul(-k, ec_neg(P, E), E)
    result = INFINITY
    addend = P
    while k:
        if k & 1:
            result = ec_add(result, addend, E)
        addend = ec_add(addend, addend, E)
        k >>= 1
    return result


class CurveTorsor(TorsorInstance):
    """Exact torsor instance on the rational points of a smooth curve."""

    def __init__(self, curve: RationalCurve):
        self.curve = curve

    def mu(self, x: CurvePoint, y: CurvePoint, z: CurvePoint) -> CurvePoint:
        return ec_add(ec_add(x, y, self.curve), ec_neg(z, self.curve), self.curve)

    def distance(self, x: CurvePoint, y: CurvePoint) -> float:
        return 0.0 if x == y else 1.0
