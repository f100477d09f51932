"""NumPy implementations of the hot kernels.

Selected at import time by torsorkit._kernels when the compiled
extension is unavailable (or TORSORKIT_KERNELS=numpy).  Semantics must
match torsorkit._kernels._speedups exactly; the cross-backend tests
enforce this.
"""

from __future__ import annotations

import numpy as np


def cyclic_origin_sweep(n: int, weights, mutate: bool = False):
    """Exhaustive origin-independence sweep of the averaging chain on Z/n.

    For every point tuple in (Z/n)^len(weights) and every origin e, runs
    the left-to-right mu-chain of weighted_combine and compares against
    the origin-0 value.  Intermediate reductions mod n are deferred to
    the end of the chain: int64 cannot overflow (|acc| <= n * (1 +
    sum|w|)) and mod-n is a ring homomorphism, so the final values are
    identical to the stepwise-reduced chain.

    mutate=True drives negative weights through the positive-sign step
    (a deliberately broken chain used as a negative control).

    Returns (cases, failures, counterexample) with cases = n^L * n; the
    counterexample (None when failures == 0) is one witness in
    backend-specific enumeration order, so only its presence, not its
    identity, is stable across backends.
    """
    weights = [int(w) for w in weights]
    L = len(weights)
    if n < 1 or L < 1:
        raise ValueError("need n >= 1 and at least one weight")
    if n ** L > 10**9:
        raise ValueError(f"sweep of {n}^{L} point tuples is out of range")
    pts = np.indices((n,) * L).reshape(L, -1).astype(np.int64)
    count = pts.shape[1]
    failures = 0
    counterexample = None
    base = None
    acc = np.empty(count, dtype=np.int64)
    for e in range(n):
        acc[:] = e
        for i, w in enumerate(weights):
            positive = w >= 0 or mutate
            for _ in range(abs(w)):
                if positive:
                    acc += pts[i]
                    acc -= e
                else:
                    acc -= pts[i]
                    acc += e
        np.mod(acc, n, out=acc)
        if base is None:
            base = acc.copy()
            continue
        mismatch = acc != base
        bad = int(np.count_nonzero(mismatch))
        failures += bad
        if bad and counterexample is None:
            idx = int(np.argmax(mismatch))
            counterexample = {
                "points": [int(pts[i, idx]) for i in range(L)],
                "origin": e,
                "value": int(acc[idx]),
                "base_origin": 0,
                "base_value": int(base[idx]),
            }
    return count * n, failures, counterexample


def _reduce(z: np.ndarray, tau: complex) -> np.ndarray:
    """Representative of z in the fundamental parallelogram of Z + tau*Z."""
    y = z.imag / tau.imag
    x = z.real - y * tau.real
    x -= np.floor(x)
    y -= np.floor(y)
    # tiny negatives round to 1.0 after the floor shift; keep [0, 1)
    x[x >= 1.0] = 0.0
    y[y >= 1.0] = 0.0
    return (x + y * tau.real) + 1j * (y * tau.imag)


def torus_average_reps(weights, mus, powers, coeffs, offsets, tau, origin, ts):
    """Weighted torsor average of all branch values over an array of base points.

    Mirrors the scalar path exactly: for each entry i the principal
    mu_i-th root s0(t) is rotated through all mu_i branches, each branch
    value is reduced to the fundamental parallelogram, and the branch
    points enter the left-to-right mu-chain with weight w_i (|w_i| steps
    each, reduced after every step).

    weights/mus are per-entry int sequences; powers/coeffs hold the
    series terms of all entries concatenated, with entry i occupying
    [offsets[i], offsets[i+1]).  Returns the reduced complex
    representative of the average for every t in ts.
    """
    ts = np.asarray(ts, dtype=np.complex128)
    tau = complex(tau)
    e = complex(origin)
    acc = np.full(ts.shape, e, dtype=np.complex128)
    for i, (w, mu) in enumerate(zip(weights, mus)):
        w = int(w)
        mu = int(mu)
        pw = powers[offsets[i] : offsets[i + 1]]
        cf = coeffs[offsets[i] : offsets[i + 1]]
        if mu == 1:
            s0 = ts  # exact: no polar round-trip for single sections
        else:
            s0 = np.abs(ts) ** (1.0 / mu) * np.exp(1j * (np.angle(ts) / mu))
        for j in range(mu):
            s = s0 * np.exp(1j * (2.0 * np.pi * j / mu))
            branch = np.zeros(ts.shape, dtype=np.complex128)
            for p, c in zip(pw, cf):
                branch += c * s ** int(p)
            branch = _reduce(branch, tau)
            for _ in range(abs(w)):
                if w >= 0:
                    acc = _reduce(acc + branch - e, tau)
                else:
                    acc = _reduce(acc + e - branch, tau)
    return acc
