"""The complex torus C/(Z + tau*Z) as a concrete numeric torsor instance.

Points are stored by a complex representative reduced to the half-open
fundamental parallelogram {x + y*tau : 0 <= x, y < 1}.  Equality and
distance are measured in lattice coordinates modulo 1 (wrap-around
aware), not in raw complex distance: points near opposite edges of the
parallelogram are close.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import LatticeMismatch
from .torsor import TorsorInstance


@dataclass(frozen=True)
class Lattice:
    """The lattice Z + tau*Z; requires Im(tau) > 0."""

    tau: complex

    def __post_init__(self):
        if not self.tau.imag > 0:
            raise ValueError(f"period ratio needs positive imaginary part, got {self.tau}")

    def coords(self, z: complex) -> tuple[float, float]:
        """Real (x, y) with z = x + y*tau."""
        y = z.imag / self.tau.imag
        x = z.real - y * self.tau.real
        return x, y

    def from_coords(self, x: float, y: float) -> complex:
        return complex(x + y * self.tau.real, y * self.tau.imag)

    def reduce(self, z: complex) -> complex:
        """Representative in the fundamental parallelogram (corner at 0)."""
        x, y = self.coords(z)
        x -= math.floor(x)
        y -= math.floor(y)
        # tiny negative inputs round to 1.0 after the floor shift; keep the
        # domain half-open
        if x >= 1.0:
            x = 0.0
        if y >= 1.0:
            y = 0.0
        return self.from_coords(x, y)

    def wrap_delta(self, z: complex, w: complex) -> tuple[float, float]:
        """Nearest-representative coordinate step from w to z (each in [-1/2, 1/2))."""
        dx, dy = self.coords(z - w)
        return dx - round(dx), dy - round(dy)

    def metric(self, z: complex, w: complex) -> float:
        """Quotient metric: Euclidean norm of the wrapped coordinate difference."""
        dx, dy = self.wrap_delta(z, w)
        return math.hypot(dx, dy)


@dataclass(frozen=True)
class TorusPoint:
    rep: complex
    lattice: Lattice


def reduce_mod_lattice(z: complex, lat: Lattice) -> TorusPoint:
    """Canonical representative of z in the fundamental parallelogram."""
    return TorusPoint(lat.reduce(complex(z)), lat)


def _require_same_lattice(p: TorusPoint, q: TorusPoint) -> Lattice:
    if p.lattice.tau != q.lattice.tau:
        raise LatticeMismatch(f"lattices differ: {p.lattice.tau} vs {q.lattice.tau}")
    return p.lattice


def torus_add(p: TorusPoint, q: TorusPoint) -> TorusPoint:
    lat = _require_same_lattice(p, q)
    return reduce_mod_lattice(p.rep + q.rep, lat)


def torus_neg(p: TorusPoint) -> TorusPoint:
    return reduce_mod_lattice(-p.rep, p.lattice)


class TorusTorsor(TorsorInstance):
    """Torsor structure on C/(Z + tau*Z); tolerance in the quotient metric."""

    def __init__(self, lattice: Lattice, tolerance: float = 1e-9):
        self.lattice = lattice
        self.tolerance = tolerance

    def mu(self, x: TorusPoint, y: TorusPoint, z: TorusPoint) -> TorusPoint:
        return reduce_mod_lattice(x.rep + y.rep - z.rep, self.lattice)

    def distance(self, x: TorusPoint, y: TorusPoint) -> float:
        return self.lattice.metric(x.rep, y.rep)

    def zero(self) -> TorusPoint:
        return TorusPoint(0j, self.lattice)

    def point(self, z: complex) -> TorusPoint:
        return reduce_mod_lattice(z, self.lattice)

    def random_point(self, rng) -> TorusPoint:
        return self.point(self.lattice.from_coords(rng.random(), rng.random()))

    def __repr__(self):
        return f"TorusTorsor(tau={self.lattice.tau})"
