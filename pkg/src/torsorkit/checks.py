"""Torsor invariant suite: exhaustive finite checks plus seeded numeric checks.

Drives the axioms of the abstract torsor against all three concrete
instances (Z/n exhaustively, the complex torus and the exact rational
curve on seeded samples).  The CLI torsor-check command renders the
results; tests assert on them directly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .elliptic import CurveTorsor, RationalCurve, ec_add, ec_neg, ec_scalar_mul
from .torsor import (
    CyclicTorsor,
    WeightedPoints,
    induced_product,
    origin_independence_exhaustive,
    weighted_combine,
)
from .torus import Lattice, TorusTorsor, reduce_mod_lattice


@dataclass
class InvariantResult:
    name: str
    cases: int
    passed: bool
    counterexample: Optional[dict] = None

    def fail(self, **info):
        if self.passed:
            self.passed = False
            self.counterexample = info


def check_cyclic_identity(n_lo: int, n_hi: int) -> InvariantResult:
    """mu(x, y, y) = x, exhaustively on Z/n."""
    res = InvariantResult("cyclic-identity-axiom", 0, True)
    for n in range(n_lo, n_hi + 1):
        inst = CyclicTorsor(n)
        for x in inst.points():
            for y in inst.points():
                res.cases += 1
                if inst.mu(x, y, y) != x:
                    res.fail(n=n, x=x, y=y, value=inst.mu(x, y, y))
    return res


def check_cyclic_product_axioms(n_lo: int, n_hi: int) -> InvariantResult:
    """Commutativity, associativity and identity of x*y = mu(x, y, e), all e."""
    res = InvariantResult("cyclic-product-abelian-group", 0, True)
    for n in range(n_lo, n_hi + 1):
        inst = CyclicTorsor(n)
        pts = list(inst.points())
        for e in pts:
            for x in pts:
                if induced_product(inst, x, e, e) != x:
                    res.fail(n=n, e=e, x=x, kind="identity")
                for y in pts:
                    res.cases += 1
                    if induced_product(inst, x, y, e) != induced_product(inst, y, x, e):
                        res.fail(n=n, e=e, x=x, y=y, kind="commutativity")
                    for z in pts:
                        lhs = induced_product(inst, induced_product(inst, x, y, e), z, e)
                        rhs = induced_product(inst, x, induced_product(inst, y, z, e), e)
                        if lhs != rhs:
                            res.fail(n=n, e=e, x=x, y=y, z=z, kind="associativity")
    return res


def check_cyclic_bijectivity(n_lo: int, n_hi: int) -> InvariantResult:
    """For fixed y (and e), x -> x*y is a bijection on Z/n."""
    res = InvariantResult("cyclic-translation-bijective", 0, True)
    for n in range(n_lo, n_hi + 1):
        inst = CyclicTorsor(n)
        pts = list(inst.points())
        for e in pts:
            for y in pts:
                res.cases += 1
                image = {induced_product(inst, x, y, e) for x in pts}
                if len(image) != n:
                    res.fail(n=n, e=e, y=y, image_size=len(image))
    return res


def check_cyclic_origin_independence(
    n_lo: int, n_hi: int, max_len: int = 4, weight_bound: int = 3, mutate: bool = False
) -> InvariantResult:
    """Exhaustive weighted_combine origin independence (kernel-backed sweep)."""
    cases, failures, ce = origin_independence_exhaustive(
        range(n_lo, n_hi + 1), max_len=max_len, weight_bound=weight_bound, mutate=mutate
    )
    return InvariantResult(
        "cyclic-origin-independence", cases, failures == 0, ce
    )


def check_permutation_invariance(seed: int, trials: int = 200) -> InvariantResult:
    """Permuting the entry list leaves weighted_combine unchanged (Z/n, exact)."""
    rng = random.Random(seed)
    res = InvariantResult("permutation-invariance", 0, True)
    for _ in range(trials):
        n = rng.randint(2, 12)
        inst = CyclicTorsor(n)
        length = rng.randint(1, 4)
        weights = [rng.randint(-3, 3) for _ in range(length - 1)]
        weights.append(1 - sum(weights))
        entries = [(w, rng.randrange(n)) for w in weights]
        origin = rng.randrange(n)
        shuffled = entries[:]
        rng.shuffle(shuffled)
        res.cases += 1
        a = weighted_combine(inst, WeightedPoints(tuple(entries)), origin)
        b = weighted_combine(inst, WeightedPoints(tuple(shuffled)), origin)
        if a != b:
            res.fail(n=n, entries=entries, shuffled=shuffled, origin=origin, a=a, b=b)
    return res


_TAUS = (1j, 0.25 + 1.25j, -0.5 + 0.866j)


def check_torus_identity(seed: int, samples: int = 1000, tol: float = 1e-12) -> InvariantResult:
    """distance(mu(x, y, y), x) <= tol on random torus points."""
    rng = random.Random(seed)
    res = InvariantResult("torus-identity-axiom", 0, True)
    for tau in _TAUS:
        inst = TorusTorsor(Lattice(tau))
        for _ in range(samples):
            x = inst.random_point(rng)
            y = inst.random_point(rng)
            res.cases += 1
            if inst.distance(inst.mu(x, y, y), x) > tol:
                res.fail(tau=[tau.real, tau.imag], x=[x.rep.real, x.rep.imag])
    return res


def check_torus_reduce_periodicity(
    seed: int, samples: int = 10_000, tol: float = 1e-12
) -> InvariantResult:
    """reduce is idempotent and invariant under adding lattice vectors."""
    rng = random.Random(seed)
    res = InvariantResult("torus-reduce-periodicity", 0, True)
    for tau in _TAUS:
        lat = Lattice(tau)
        for _ in range(samples):
            z = complex(rng.uniform(-10, 10), rng.uniform(-10, 10))
            m = rng.randint(-5, 5)
            n = rng.randint(-5, 5)
            res.cases += 1
            p = reduce_mod_lattice(z, lat)
            q = reduce_mod_lattice(z + m + n * tau, lat)
            again = reduce_mod_lattice(p.rep, lat)
            if lat.metric(p.rep, q.rep) > tol or lat.metric(again.rep, p.rep) > tol:
                res.fail(tau=[tau.real, tau.imag], z=[z.real, z.imag], m=m, n=n)
    return res


def check_torus_origin_independence(
    seed: int, trials: int = 100, origins: int = 8, tol: float = 1e-9
) -> InvariantResult:
    """weighted_combine on the torus agrees across random origins within tol."""
    rng = random.Random(seed)
    res = InvariantResult("torus-origin-independence", 0, True)
    for _ in range(trials):
        tau = _TAUS[rng.randrange(len(_TAUS))]
        inst = TorusTorsor(Lattice(tau))
        length = rng.randint(1, 4)
        weights = [rng.randint(-3, 3) for _ in range(length - 1)]
        weights.append(1 - sum(weights))
        entries = tuple((w, inst.random_point(rng)) for w in weights)
        pts = WeightedPoints(entries)
        base = weighted_combine(inst, pts, inst.zero())
        for _ in range(origins):
            res.cases += 1
            e = inst.random_point(rng)
            v = weighted_combine(inst, pts, e)
            if inst.distance(base, v) > tol:
                res.fail(
                    tau=[tau.real, tau.imag],
                    weights=weights,
                    origin=[e.rep.real, e.rep.imag],
                    dist=inst.distance(base, v),
                )
    return res


_CURVES = (
    RationalCurve(Fraction(0), Fraction(1)),
    RationalCurve(Fraction(-4), Fraction(4)),
)
_SEEDS = {
    (0, 1): [(Fraction(0), Fraction(1)), (Fraction(2), Fraction(3)), (Fraction(-1), Fraction(0))],
    (-4, 4): [(Fraction(0), Fraction(2)), (Fraction(1), Fraction(1)), (Fraction(2), Fraction(2))],
}


def _curve_sample(E: RationalCurve, rng: random.Random):
    seeds = _SEEDS[(int(E.a), int(E.b))]
    x, y = seeds[rng.randrange(len(seeds))]
    p = E.point(x, y)
    return ec_scalar_mul(rng.randint(-3, 3), p, E)


def check_curve_torsor_axioms(seed: int, trials: int = 150) -> InvariantResult:
    """Identity and induced-product abelian axioms on exact curve points."""
    rng = random.Random(seed)
    res = InvariantResult("curve-torsor-axioms", 0, True)
    for _ in range(trials):
        E = _CURVES[rng.randrange(len(_CURVES))]
        inst = CurveTorsor(E)
        x, y, z, e = (_curve_sample(E, rng) for _ in range(4))
        res.cases += 1
        if inst.mu(x, y, y) != x:
            res.fail(curve=[str(E.a), str(E.b)], kind="identity")
        if induced_product(inst, x, y, e) != induced_product(inst, y, x, e):
            res.fail(curve=[str(E.a), str(E.b)], kind="commutativity")
        lhs = induced_product(inst, induced_product(inst, x, y, e), z, e)
        rhs = induced_product(inst, x, induced_product(inst, y, z, e), e)
        if lhs != rhs:
            res.fail(curve=[str(E.a), str(E.b)], kind="associativity")
    return res


def check_curve_combine_vs_group(seed: int, trials: int = 100) -> InvariantResult:
    """weighted_combine equals e + sum w_i*(p_i - e) evaluated by the group law."""
    rng = random.Random(seed)
    res = InvariantResult("curve-combine-vs-group-law", 0, True)
    for _ in range(trials):
        E = _CURVES[rng.randrange(len(_CURVES))]
        inst = CurveTorsor(E)
        length = rng.randint(1, 4)
        weights = [rng.randint(-3, 3) for _ in range(length - 1)]
        weights.append(1 - sum(weights))
        points = [_curve_sample(E, rng) for _ in weights]
        e = _curve_sample(E, rng)
        res.cases += 1
        got = weighted_combine(inst, WeightedPoints(tuple(zip(weights, points))), e)
        want = e
        for w, p in zip(weights, points):
            diff = ec_add(p, ec_neg(e, E), E)
            want = ec_add(want, ec_scalar_mul(w, diff, E), E)
        if got != want:
            res.fail(curve=[str(E.a), str(E.b)], weights=weights)
    return res


def run_suite(
    n_lo: int = 2,
    n_hi: int = 12,
    max_len: int = 4,
    weight_bound: int = 3,
    seed: int = 0,
    tol: float = 1e-9,
    mutate: bool = False,
) -> list[InvariantResult]:
    return [
        check_cyclic_identity(n_lo, n_hi),
        check_cyclic_product_axioms(n_lo, n_hi),
        check_cyclic_bijectivity(n_lo, n_hi),
        check_cyclic_origin_independence(n_lo, n_hi, max_len, weight_bound, mutate),
        check_permutation_invariance(seed),
        check_torus_identity(seed),
        check_torus_reduce_periodicity(seed),
        check_torus_origin_independence(seed, tol=tol),
        check_curve_torsor_axioms(seed),
        check_curve_combine_vs_group(seed),
    ]
