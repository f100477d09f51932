"""Integer arithmetic of fiber-component multiplicities.

gcd, deterministic Bezout weights, ramified base change, and the
min == gcd admissibility verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotDivisible


@dataclass(frozen=True)
class MultiplicityVector:
    """Component multiplicities (mu_1, ..., mu_k) of a singular fiber."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("multiplicity vector must be nonempty")
        if any(int(m) != m or m < 1 for m in self.entries):
            raise ValueError(f"multiplicities must be positive integers: {self.entries}")
        object.__setattr__(self, "entries", tuple(int(m) for m in self.entries))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class BezoutCertificate:
    """Integer weights with sum(a_i * mu_i) == gcd."""

    weights: tuple[int, ...]
    gcd: int

    def verify(self, mu: MultiplicityVector) -> bool:
        return (
            len(self.weights) == len(mu.entries)
            and sum(a * m for a, m in zip(self.weights, mu.entries)) == self.gcd
            and all(m % self.gcd == 0 for m in mu.entries)
        )


@dataclass(frozen=True)
class AdmissibilityReport:
    minimum: int
    gcd: int
    admissible: bool


def as_vector(mu: MultiplicityVector | Sequence[int] | Iterable[int]) -> MultiplicityVector:
    if isinstance(mu, MultiplicityVector):
        return mu
    return MultiplicityVector(tuple(mu))


def gcd_vector(mu) -> int:
    """gcd of all entries (positive)."""
    return math.gcd(*as_vector(mu).entries)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """Classic iterative extended Euclid: returns (g, x, y) with x*a + y*b = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def bezout_weights(mu) -> BezoutCertificate:
    """Deterministic weights with sum(a_i * mu_i) == gcd(mu).

    Left-fold of the extended Euclidean algorithm over the entry list:
    the partial certificate for (mu_1, ..., mu_j) is rescaled by the x
    returned for (g_j, mu_{j+1}) and the matching y is appended.  No
    post-normalization, so identical input yields identical weights.
    """
    vec = as_vector(mu)
    entries = vec.entries
    g = entries[0]
    weights = [1]
    for m in entries[1:]:
        g, x, y = _egcd(g, m)
        weights = [x * w for w in weights]
        weights.append(y)
    cert = BezoutCertificate(tuple(weights), g)
    assert cert.verify(vec), "internal error: Bezout fold produced an invalid certificate"
    return cert


def ramified_base_change(mu, d: int) -> MultiplicityVector:
    """Divide every multiplicity by d (the order of the ramified covering)."""
    vec = as_vector(mu)
    if d < 1:
        raise ValueError("covering order must be a positive integer")
    bad = [m for m in vec.entries if m % d]
    if bad:
        raise NotDivisible(f"order {d} does not divide multiplicities {bad}")
    return MultiplicityVector(tuple(m // d for m in vec.entries))


def admissibility_report(mu) -> AdmissibilityReport:
    """min, gcd, and whether min == gcd.

    admissible == False means the vector cannot occur as the component
    multiplicities of a singular fiber of a torus fibration over a curve.
    """
    vec = as_vector(mu)
    mn = min(vec.entries)
    g = gcd_vector(vec)
    return AdmissibilityReport(minimum=mn, gcd=g, admissible=mn == g)
