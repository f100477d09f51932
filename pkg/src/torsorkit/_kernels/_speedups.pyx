# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot kernels; semantics mirror torsorkit._kernels.fallback."""

from libc.math cimport atan2, cos, floor, hypot, pi, pow, sin

import numpy as np

DEF MAX_LEN = 16


cdef inline long long _chain(long long n, long long* w, Py_ssize_t L,
                             long long* pts, long long e, bint mutate) noexcept nogil:
    # left-to-right mu-chain of weighted_combine on Z/n.  The per-step
    # reduction mod n is deferred to the end (mod is a ring
    # homomorphism and the exact integer accumulator cannot overflow),
    # and |w| repeated additions of the same step collapse to one
    # integer multiplication; both rewrites leave the value identical.
    cdef long long acc = e
    cdef long long ww, p, reps
    cdef Py_ssize_t i
    cdef bint positive
    for i in range(L):
        ww = w[i]
        p = pts[i]
        positive = ww >= 0 or mutate
        reps = ww if ww >= 0 else -ww
        if positive:
            acc += reps * (p - e)
        else:
            acc += reps * (e - p)
    acc %= n
    if acc < 0:
        acc += n
    return acc


def cyclic_origin_sweep(n, weights, bint mutate=False):
    """Exhaustive origin-independence sweep; see fallback.cyclic_origin_sweep."""
    cdef long long cn = n
    cdef Py_ssize_t L = len(weights)
    if cn < 1 or L < 1:
        raise ValueError("need n >= 1 and at least one weight")
    if L > MAX_LEN:
        raise ValueError(f"at most {MAX_LEN} weights supported")
    if n ** L > 10**9:  # exact big-int check before the C loops
        raise ValueError(f"sweep of {n}^{L} point tuples is out of range")
    cdef long long[MAX_LEN] w
    cdef long long[MAX_LEN] pts
    cdef Py_ssize_t i
    for i in range(L):
        w[i] = weights[i]
        pts[i] = 0
    cdef long long total = 1
    for i in range(L):
        total *= cn
    cdef long long failures = 0
    cdef long long base, v, e
    cdef long long idx
    cdef bint more = True
    counterexample = None
    with nogil:
        while more:
            base = _chain(cn, w, L, pts, 0, mutate)
            for e in range(1, cn):
                v = _chain(cn, w, L, pts, e, mutate)
                if v != base:
                    failures += 1
                    if failures == 1:
                        with gil:
                            counterexample = {
                                "points": [int(pts[i]) for i in range(L)],
                                "origin": int(e),
                                "value": int(v),
                                "base_origin": 0,
                                "base_value": int(base),
                            }
            # odometer increment over (Z/n)^L
            more = False
            for i in range(L):
                pts[i] += 1
                if pts[i] < cn:
                    more = True
                    break
                pts[i] = 0
    return int(total * cn), int(failures), counterexample


cdef inline double complex _cpowi(double complex s, long long p) noexcept nogil:
    # binary exponentiation; negative powers as 1/(s^n), matching CPython
    cdef double complex result = 1.0
    cdef double complex base = s
    cdef long long m = p if p >= 0 else -p
    while m:
        if m & 1:
            result = result * base
        base = base * base
        m >>= 1
    if p < 0:
        result = 1.0 / result
    return result


cdef inline double complex _reduce(double complex z, double tau_re, double tau_im) noexcept nogil:
    cdef double y = z.imag / tau_im
    cdef double x = z.real - y * tau_re
    x -= floor(x)
    y -= floor(y)
    # tiny negatives round to 1.0 after the floor shift; keep [0, 1)
    if x >= 1.0:
        x = 0.0
    if y >= 1.0:
        y = 0.0
    return (x + y * tau_re) + 1j * (y * tau_im)


def torus_average_reps(weights, mus, powers, coeffs, offsets, tau, origin, ts):
    """Weighted torsor average over sample points; see fallback.torus_average_reps."""
    cdef long long[::1] w = np.ascontiguousarray(weights, dtype=np.int64)
    cdef long long[::1] mu = np.ascontiguousarray(mus, dtype=np.int64)
    cdef long long[::1] pw = np.ascontiguousarray(powers, dtype=np.int64)
    cdef double complex[::1] cf = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef long long[::1] off = np.ascontiguousarray(offsets, dtype=np.int64)
    ts_in = np.ascontiguousarray(ts, dtype=np.complex128)
    shape = ts_in.shape
    ts_arr = ts_in.ravel()
    cdef double complex[::1] tv = ts_arr
    out_arr = np.empty(ts_arr.shape[0], dtype=np.complex128)
    cdef double complex[::1] out = out_arr

    cdef double tau_re = complex(tau).real
    cdef double tau_im = complex(tau).imag
    cdef double complex e = complex(origin)
    cdef Py_ssize_t n_entries = w.shape[0]
    cdef Py_ssize_t n_samples = tv.shape[0]
    cdef Py_ssize_t m, i, k
    cdef long long j, reps, r, mui, wi
    cdef double complex t, s0, s, branch, acc
    cdef double angle
    cdef bint positive

    with nogil:
        for m in range(n_samples):
            t = tv[m]
            acc = e
            for i in range(n_entries):
                wi = w[i]
                mui = mu[i]
                positive = wi >= 0
                reps = wi if wi >= 0 else -wi
                if mui == 1:
                    s0 = t  # exact: no polar round-trip for single sections
                else:
                    angle = atan2(t.imag, t.real) / mui
                    s0 = pow(abs(t), 1.0 / mui) * (cos(angle) + 1j * sin(angle))
                for j in range(mui):
                    angle = 2.0 * pi * j / mui
                    s = s0 * (cos(angle) + 1j * sin(angle))
                    branch = 0.0
                    for k in range(off[i], off[i + 1]):
                        branch = branch + cf[k] * _cpowi(s, pw[k])
                    branch = _reduce(branch, tau_re, tau_im)
                    for r in range(reps):
                        if positive:
                            acc = _reduce(acc + branch - e, tau_re, tau_im)
                        else:
                            acc = _reduce(acc + e - branch, tau_re, tau_im)
            out[m] = acc
    return out_arr.reshape(shape)
