"""Branched multisections over a punctured disk and their torsor average.

A degree-mu multisection is a finite complex (Laurent) series z(s)
evaluated on the mu-fold cover t = s^mu: its mu branch values over t
are z(zeta^j * s0), zeta = exp(2*pi*i/mu), s0 the principal mu-th root.
A weighted system attaches integer weights a_i with sum(a_i * mu_i) = 1
(Bezout weights of the multiplicity vector when gcd = 1); averaging all
branch points fiberwise through the torus torsor yields a single-valued
map phi on the punctured disk, and removability of the puncture is
verified numerically: bounded sups on shrinking circles plus vanishing
negative Laurent coefficients of a continuous lift.

Fibers are analytic tori C/(Z + tau(t)Z), either constant tau or
tau(t) = tau0 + k*log(t)/(2*pi*i) on a tracked branch (I_k-type
monodromy).
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .errors import DomainError, GcdError, LiftFailure, WeightSumError
from .multiplicity import MultiplicityVector, as_vector, bezout_weights, gcd_vector
from .torsor import WeightedPoints, weighted_combine
from .torus import Lattice, TorusPoint, TorusTorsor, reduce_mod_lattice

DEFAULT_RADII = tuple(10.0 ** -k for k in range(1, 7))
DEFAULT_SAMPLES = 256
DEFAULT_MONODROMY_TOL = 1e-9
DEFAULT_COEFF_TOL = 1e-6
GROWTH_PER_DECADE = 0.10


@dataclass(frozen=True)
class FiberFamily:
    """Family of fiber tori over the punctured disk |t| <= radius.

    log_k = 0 gives constant tau0; log_k = k >= 1 gives
    tau(t) = tau0 + k*log(t)/(2*pi*i), evaluated on an explicitly
    tracked branch.  Advancing the branch replaces tau by tau + k,
    which generates the same lattice.
    """

    tau0: complex
    log_k: int = 0
    radius: float = 0.5

    def __post_init__(self):
        if not complex(self.tau0).imag > 0:
            raise ValueError(f"Im(tau0) must be positive, got {self.tau0}")
        if self.log_k < 0:
            raise ValueError("log_k must be a nonnegative integer")
        if not 0 < self.radius:
            raise ValueError("radius must be positive")
        if self.log_k and self.radius >= 1:
            # Im tau(t) = Im tau0 + (k/2pi) log(1/|t|) stays positive only for |t| < 1
            raise ValueError("log-monodromy families need radius < 1")

    def tau_at(self, t: complex, branch: int = 0) -> complex:
        if self.log_k == 0:
            return complex(self.tau0)
        log_t = cmath.log(t) + 2j * math.pi * branch
        return complex(self.tau0) + self.log_k * log_t / (2j * math.pi)

    def lattice_at(self, t: complex, branch: int = 0) -> Lattice:
        return Lattice(self.tau_at(t, branch))


@dataclass(frozen=True)
class BranchedMultisection:
    """Degree-mu multisection: series z(s) on the cover t = s^mu.

    series holds (power, coefficient) terms; powers are integers and
    may be negative (used by pole controls), zero coefficients are
    dropped.
    """

    mu: int
    series: tuple[tuple[int, complex], ...]

    def __post_init__(self):
        if self.mu < 1:
            raise ValueError("cover degree mu must be a positive integer")
        terms: dict[int, complex] = {}
        for p, c in self.series:
            c = complex(c)
            if c:
                terms[int(p)] = terms.get(int(p), 0j) + c
        object.__setattr__(
            self, "series", tuple(sorted((p, c) for p, c in terms.items() if c))
        )

    def eval_series(self, s: complex) -> complex:
        return sum((c * s ** p for p, c in self.series), 0j)


@dataclass(frozen=True)
class WeightedSystem:
    """Integer-weighted multisections over a common fiber family."""

    entries: tuple[tuple[int, BranchedMultisection], ...]
    family: FiberFamily

    def __post_init__(self):
        object.__setattr__(
            self, "entries", tuple((int(w), ms) for w, ms in self.entries)
        )

    def multiplicities(self) -> MultiplicityVector:
        return MultiplicityVector(tuple(ms.mu for _, ms in self.entries))

    def total_multiplicity(self) -> int:
        return sum(w * ms.mu for w, ms in self.entries)


@dataclass(frozen=True)
class ExtensionVerdict:
    """Numerical removable-singularity report for an averaged section.

    verdict is "removable", "pole-suspected" or "inconclusive";
    removable requires bounded sups and all negative-coefficient
    estimates below tolerance.  lift_winding records the lattice vector
    by which the unwrapped lift fails to close up around the outermost
    circle ((0, 0) for honest single-valued lifts).
    """

    bounded: bool
    sup_by_radius: tuple[tuple[float, float], ...]
    negative_coefficient_bounds: tuple[tuple[int, float], ...]
    verdict: str
    lift_winding: tuple[int, int] = (0, 0)

    def coefficient(self, k: int) -> float:
        for order, value in self.negative_coefficient_bounds:
            if order == k:
                return value
        raise KeyError(k)


def _check_domain(family: FiberFamily, t: complex):
    t = complex(t)
    if t == 0:
        raise DomainError("t = 0 is the puncture")
    if abs(t) > family.radius * (1 + 1e-12):
        raise DomainError(f"|t| = {abs(t)} exceeds the disk radius {family.radius}")


def _principal_root(t: complex, mu: int) -> complex:
    """|t|^(1/mu) * exp(i*Arg(t)/mu) with Arg in (-pi, pi].

    mu = 1 returns t itself: the polar round-trip would cost an ulp and
    single sections must be reproduced exactly.
    """
    if mu == 1:
        return complex(t)
    return abs(t) ** (1.0 / mu) * cmath.exp(1j * (cmath.phase(t) / mu))


def _branch_reps(ms: BranchedMultisection, t: complex, deck: int = 0) -> list[complex]:
    s0 = _principal_root(t, ms.mu)
    if deck:
        s0 *= cmath.exp(1j * (2.0 * math.pi * deck / ms.mu))
    return [
        ms.eval_series(s0 * cmath.exp(1j * (2.0 * math.pi * j / ms.mu)))
        for j in range(ms.mu)
    ]


def branch_points(
    ms: BranchedMultisection, family: FiberFamily, t: complex
) -> list[TorusPoint]:
    """The mu fiber points {reduce(z(zeta^j s0))} over t.

    As a multiset this does not depend on which mu-th root is called
    principal: changing the root permutes the branches.
    """
    _check_domain(family, t)
    lat = family.lattice_at(t)
    return [reduce_mod_lattice(b, lat) for b in _branch_reps(ms, t)]


def _require_total_one(sys: WeightedSystem):
    total = sys.total_multiplicity()
    if total != 1:
        raise WeightSumError(f"sum of a_i * mu_i must be 1, got {total}")


def average_section(
    sys: WeightedSystem,
    t: complex,
    origin: Optional[TorusPoint] = None,
    deck: int = 0,
    tolerance: float = 1e-9,
) -> TorusPoint:
    """Fiberwise torsor average of all branch points, one point over t.

    Every branch of entry i carries weight a_i; the total weight is
    sum(a_i * mu_i) = 1, so the combination is origin-independent.
    deck > 0 applies the deck transformation induced by t -> e^{2pi i}t
    (principal roots rotated, tau branch advanced); it is used by
    monodromy_check and exposed for diagnostics.
    """
    _require_total_one(sys)
    _check_domain(sys.family, t)
    torsor = TorusTorsor(sys.family.lattice_at(t, branch=deck), tolerance=tolerance)
    pairs = []
    for w, ms in sys.entries:
        for b in _branch_reps(ms, t, deck=deck):
            pairs.append((w, torsor.point(b)))
    if origin is None:
        origin = torsor.zero()
    elif not isinstance(origin, TorusPoint):
        origin = torsor.point(complex(origin))
    return weighted_combine(torsor, WeightedPoints(tuple(pairs)), origin)


def monodromy_check(
    sys: WeightedSystem, t: complex, tol: float = DEFAULT_MONODROMY_TOL
) -> bool:
    """Single-valuedness at t: the deck transformation must fix the average.

    Recomputes the average with every principal root zeta-rotated and
    the tau log-branch advanced, and compares in the lattice metric of
    the base branch (the advanced lattice Z + (tau+k)Z is the same
    subgroup of C, so the metric agrees).
    """
    v0 = average_section(sys, t)
    v1 = average_section(sys, t, deck=1)
    return sys.family.lattice_at(t).metric(v0.rep, v1.rep) <= tol


def _pack_system(sys: WeightedSystem):
    weights = np.array([w for w, _ in sys.entries], dtype=np.int64)
    mus = np.array([ms.mu for _, ms in sys.entries], dtype=np.int64)
    powers: list[int] = []
    coeffs: list[complex] = []
    offsets = [0]
    for _, ms in sys.entries:
        for p, c in ms.series:
            powers.append(p)
            coeffs.append(c)
        offsets.append(len(powers))
    return (
        weights,
        mus,
        np.array(powers, dtype=np.int64),
        np.array(coeffs, dtype=np.complex128),
        np.array(offsets, dtype=np.int64),
    )


def _circle_points(r: float, n: int) -> np.ndarray:
    theta = 2.0 * np.pi * np.arange(n) / n
    return r * np.exp(1j * theta)


def _average_reps_on(sys: WeightedSystem, ts: np.ndarray) -> np.ndarray:
    weights, mus, powers, coeffs, offsets = _pack_system(sys)
    return _kernels.torus_average_reps(
        weights, mus, powers, coeffs, offsets, complex(sys.family.tau0), 0j, ts
    )


def _coords(lat: Lattice, reps: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    y = reps.imag / lat.tau.imag
    x = reps.real - y * lat.tau.real
    return x, y


def _lattice_norms(lat: Lattice, reps: np.ndarray) -> np.ndarray:
    x, y = _coords(lat, reps)
    dx = x - np.round(x)
    dy = y - np.round(y)
    return np.hypot(dx, dy)


def _unwrap_lift(lat: Lattice, reps: np.ndarray):
    """Continuous lift of the circle samples by nearest-representative steps.

    Returns (lift complex array, winding lattice vector).  Raises
    LiftFailure when adjacent samples jump by more than half a lattice
    cell in the quotient metric, i.e. the circle is under-sampled.
    """
    x, y = _coords(lat, reps)
    n = len(x)
    lift_x = np.empty(n)
    lift_y = np.empty(n)
    lift_x[0] = x[0]
    lift_y[0] = y[0]
    for m in range(1, n):
        dx = x[m] - lift_x[m - 1]
        dy = y[m] - lift_y[m - 1]
        dx -= round(dx)
        dy -= round(dy)
        if math.hypot(dx, dy) > 0.5:
            raise LiftFailure(
                f"lift jump {math.hypot(dx, dy):.3f} > 0.5 between samples {m - 1} and {m}"
            )
        lift_x[m] = lift_x[m - 1] + dx
        lift_y[m] = lift_y[m - 1] + dy
    dx = x[0] - lift_x[-1]
    dy = y[0] - lift_y[-1]
    dx -= round(dx)
    dy -= round(dy)
    if math.hypot(dx, dy) > 0.5:
        raise LiftFailure("lift jump > 0.5 on the closing step")
    winding = (
        int(round(lift_x[-1] + dx - lift_x[0])),
        int(round(lift_y[-1] + dy - lift_y[0])),
    )
    lift = (lift_x + lift_y * lat.tau.real) + 1j * (lift_y * lat.tau.imag)
    return lift, winding


def _circle_coefficients(lift: np.ndarray, ts: np.ndarray) -> tuple[float, float]:
    """|c_-1| and |c_-2| of the lift by the trapezoid contour integral.

    On equispaced circle samples the trapezoid rule for
    (1/2pi i) * integral of phi * t^{k-1} dt collapses to the plain mean
    of phi(t_m) * t_m^k; it is exact for polynomial data of degree below
    the sample count.  The additive lattice constant of the lift
    integrates to zero for k >= 1.
    """
    c1 = abs(np.mean(lift * ts))
    c2 = abs(np.mean(lift * ts * ts))
    return float(c1), float(c2)


def circle_c1_estimate(sys: WeightedSystem, r: float, samples: int) -> float:
    """Per-circle |c_-1| diagnostic (used for the CLI CSV table)."""
    lat = Lattice(complex(sys.family.tau0))
    ts = _circle_points(r, samples)
    lift, _ = _unwrap_lift(lat, _average_reps_on(sys, ts))
    c1, _ = _circle_coefficients(lift, ts)
    return c1


def extension_check(
    sys: WeightedSystem,
    radii: Sequence[float] = DEFAULT_RADII,
    samples_per_circle: int = DEFAULT_SAMPLES,
    coeff_tol: float = DEFAULT_COEFF_TOL,
) -> ExtensionVerdict:
    """Removability evidence for the averaged section at the puncture.

    Samples phi on each circle |t| = r, recording the sup of the
    lattice-metric norm; estimates the Laurent coefficients c_-1, c_-2
    of a continuous lift on the outermost circle.  Verdict "removable"
    requires no sup growth beyond 10% per decade of shrinking radius
    and both coefficient estimates below coeff_tol; a winding lift
    (nonzero lattice monodromy of the unwrapped samples) makes the
    integrals meaningless and forces "inconclusive".
    """
    _require_total_one(sys)
    if sys.family.log_k:
        raise DomainError("extension_check supports constant-tau families only")
    radii = tuple(float(r) for r in radii)
    if not radii or any(r <= 0 for r in radii):
        raise ValueError("radii must be positive")
    if list(radii) != sorted(radii, reverse=True) or len(set(radii)) != len(radii):
        raise ValueError("radii must be strictly decreasing")
    if radii[0] > sys.family.radius * (1 + 1e-12):
        raise DomainError(f"outermost radius {radii[0]} exceeds the disk radius")
    if samples_per_circle < 16:
        raise ValueError("need at least 16 samples per circle")

    lat = Lattice(complex(sys.family.tau0))
    sups = []
    outer_reps = None
    outer_ts = None
    for r in radii:
        ts = _circle_points(r, samples_per_circle)
        reps = _average_reps_on(sys, ts)
        sups.append((r, float(np.max(_lattice_norms(lat, reps)))))
        if outer_reps is None:
            outer_reps = reps
            outer_ts = ts

    lift, winding = _unwrap_lift(lat, outer_reps)
    c1, c2 = _circle_coefficients(lift, outer_ts)

    bounded = True
    for (r_prev, sup_prev), (r_next, sup_next) in zip(sups, sups[1:]):
        decades = math.log10(r_prev / r_next)
        if sup_next > sup_prev * (1.0 + GROWTH_PER_DECADE) ** decades + 1e-12:
            bounded = False
            break

    if winding != (0, 0):
        verdict = "inconclusive"
    elif max(c1, c2) >= coeff_tol:
        verdict = "pole-suspected"
    elif bounded:
        verdict = "removable"
    else:
        verdict = "inconclusive"
    return ExtensionVerdict(
        bounded=bounded,
        sup_by_radius=tuple(sups),
        negative_coefficient_bounds=((1, c1), (2, c2)),
        verdict=verdict,
        lift_winding=winding,
    )


def build_synthetic_model(
    mu,
    seed: int,
    degree: int = 8,
    family: Optional[FiberFamily] = None,
) -> WeightedSystem:
    """Seeded random weighted system for a gcd-1 multiplicity vector.

    Bezout weights come from multiplicity.bezout_weights; branch series
    are random polynomials of the given degree.  Coefficients are drawn
    uniformly from a square scaled by 1/(4*(degree+1)*sum|a_i|*mu_i) so
    the averaged lift stays within a quarter lattice cell: there the
    maximum principle makes the per-radius sups monotone and the
    removability verdict is meaningful rather than lucky.
    """
    vec = as_vector(mu)
    g = gcd_vector(vec)
    if g != 1:
        raise GcdError(
            f"gcd of multiplicities is {g}, not 1; the averaging construction "
            "does not apply (pass to a ramified base change first)"
        )
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    cert = bezout_weights(vec)
    rng = random.Random(seed)
    scale = 1.0 / (4.0 * (degree + 1) * sum(abs(a) * m for a, m in zip(cert.weights, vec)))
    entries = []
    for a, m in zip(cert.weights, vec.entries):
        series = tuple(
            (p, complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale)))
            for p in range(degree + 1)
        )
        entries.append((a, BranchedMultisection(m, series)))
    if family is None:
        family = FiberFamily(tau0=1j, radius=0.5)
    return WeightedSystem(tuple(entries), family)
