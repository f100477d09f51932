"""Abstract abelian-torsor algebra and origin-independent signed averaging.

An abelian torsor is a set S with a ternary operation mu such that for
any e in S the product x*y := mu(x, y, e) is a commutative, associative
group law with identity e.  Equivalently mu(x, y, z) = x + y - z in any
compatible group structure, and mu(x, y, y) = x.

The averaging map takes integer-weighted points with total weight 1 and
combines them as

    origin + sum_i w_i * (p_i - origin)

evaluated purely through repeated mu, left to right over the entry list;
the certified property is that the result does not depend on the origin.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterable

from .errors import WeightSumError


class TorsorInstance(ABC):
    """A carrier set with the ternary torsor operation and a comparison metric.

    Exact instances use the discrete 0/1 metric and tolerance 0; numeric
    instances supply a genuine metric and a positive tolerance.
    """

    tolerance: float = 0.0

    @abstractmethod
    def mu(self, x, y, z):
        """The ternary operation; satisfies mu(x, y, y) = x."""

    @abstractmethod
    def distance(self, x, y) -> float:
        """Nonnegative; 0 iff equal for exact instances."""

    def equal(self, x, y) -> bool:
        return self.distance(x, y) <= self.tolerance


@dataclass(frozen=True)
class WeightedPoints:
    """Ordered list of (integer weight, carrier point) pairs."""

    entries: tuple[tuple[int, Any], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "entries", tuple((int(w), p) for w, p in self.entries)
        )

    @property
    def total_weight(self) -> int:
        return sum(w for w, _ in self.entries)

    @classmethod
    def of(cls, *pairs: tuple[int, Any]) -> "WeightedPoints":
        return cls(tuple(pairs))


def torsor_mu(inst: TorsorInstance, x, y, z):
    """mu(x, y, z) = x + y - z in any compatible group structure."""
    return inst.mu(x, y, z)


def induced_product(inst: TorsorInstance, x, y, e):
    """The group law x*y := mu(x, y, e) with identity e."""
    return inst.mu(x, y, e)


def weighted_combine(inst: TorsorInstance, pts: WeightedPoints, origin):
    """origin + sum_i w_i*(p_i - origin), via repeated mu, left to right.

    A weight w contributes |w| mu-steps: acc <- mu(acc, p, origin) for
    w > 0 and acc <- mu(acc, origin, p) for w < 0.  Requires total
    weight exactly 1; that is what makes the result origin-independent.
    """
    total = pts.total_weight
    if total != 1:
        raise WeightSumError(f"total weight must be 1, got {total}")
    acc = origin
    for w, p in pts.entries:
        if w >= 0:
            for _ in range(w):
                acc = inst.mu(acc, p, origin)
        else:
            for _ in range(-w):
                acc = inst.mu(acc, origin, p)
    return acc


class CyclicTorsor(TorsorInstance):
    """Z/n with mu(x, y, z) = x + y - z mod n; the exact finite test instance."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("modulus must be >= 1")
        self.n = n

    def mu(self, x, y, z):
        return (x + y - z) % self.n

    def distance(self, x, y) -> float:
        return 0.0 if (x - y) % self.n == 0 else 1.0

    def points(self) -> range:
        return range(self.n)

    def __repr__(self):
        return f"CyclicTorsor({self.n})"


def iter_weight_vectors(max_len: int, bound: int) -> list[tuple[int, ...]]:
    """All weight vectors of length 1..max_len, entries in [-bound, bound], sum 1."""
    out = []
    for length in range(1, max_len + 1):
        for w in itertools.product(range(-bound, bound + 1), repeat=length):
            if sum(w) == 1:
                out.append(w)
    return out


def origin_independence_exhaustive(
    n_values: Iterable[int],
    max_len: int = 4,
    weight_bound: int = 3,
    mutate: bool = False,
):
    """Exhaustively verify origin independence of weighted_combine on Z/n.

    For every n, every weight vector (entries in [-bound, bound], length
    <= max_len, sum 1) and every point tuple, the mu-chain of
    weighted_combine is evaluated at all n origins and compared.

    Returns (cases, failures, counterexample) where cases counts
    (point tuple, origin) evaluations and counterexample is None or a
    dict describing the first disagreement.  mutate=True flips the sign
    convention for negative weights (a deliberately broken chain) to
    prove the sweep can catch violations.
    """
    from . import _kernels

    vectors = iter_weight_vectors(max_len, weight_bound)
    cases = 0
    failures = 0
    counterexample = None
    for n in n_values:
        for weights in vectors:
            c, f, ce = _kernels.cyclic_origin_sweep(n, weights, mutate=mutate)
            cases += c
            failures += f
            if ce is not None and counterexample is None:
                counterexample = dict(ce, n=n, weights=list(weights))
    return cases, failures, counterexample
