"""Compiled inner loops for the enumeration.

Each kernel mirrors a pure-Python operation in ``torus``/``simplex``; the
test suite checks them against each other.
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def first_point(u, D):
    """Least k in 1..D-1 whose representative of k*u sums to D, or 0."""
    n = u.shape[0]
    cur = u.copy()
    for k in range(1, D):
        s = 0
        for i in range(n):
            s += cur[i]
        if s == D:
            return k
        for i in range(n):
            y = cur[i] + u[i]
            if y >= D:
                y -= D
            cur[i] = y
    return 0


@njit(cache=True)
def _sort_small(a):
    n = a.shape[0]
    for i in range(1, n):
        x = a[i]
        j = i - 1
        while j >= 0 and a[j] > x:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = x


@njit(cache=True)
def canonical_into(u, D, unit_list, out):
    """Write the lex-min sorted unit multiple of ``u`` into ``out``."""
    n = u.shape[0]
    tmp = np.empty(n, dtype=np.int64)
    first = True
    for c in unit_list:
        for i in range(n):
            tmp[i] = c * u[i] % D
        _sort_small(tmp)
        better = first
        if not first:
            for i in range(n):
                if tmp[i] != out[i]:
                    better = tmp[i] < out[i]
                    break
        if better:
            for i in range(n):
                out[i] = tmp[i]
            first = False


@njit(cache=True)
def a1_block(D, v1_lo, v1_hi, sorted_only, unit_list):
    """Canonical forms of the empty quintuples ``(-1, v1, v2, v3, v4)`` with v1 in the block.

    With ``sorted_only`` only ``v1 <= v2 <= v3 <= v4`` is scanned; every class
    with a unimodular facet still has such a representative.
    """
    cap = 64
    out = np.empty((cap, 5), dtype=np.int64)
    count = 0
    u = np.empty(5, dtype=np.int64)
    u[0] = (D - 1) % D
    for v1 in range(v1_lo, v1_hi):
        v2_lo = v1 if sorted_only else 0
        for v2 in range(v2_lo, D):
            v3_lo = v2 if sorted_only else 0
            for v3 in range(v3_lo, D):
                v4 = (1 - v1 - v2 - v3) % D
                if sorted_only and v4 < v3:
                    continue
                u[1] = v1
                u[2] = v2
                u[3] = v3
                u[4] = v4
                if D > 1 and first_point(u, D) != 0:
                    continue
                if count == cap:
                    bigger = np.empty((2 * cap, 5), dtype=np.int64)
                    bigger[:cap] = out
                    out = bigger
                    cap *= 2
                canonical_into(u, D, unit_list, out[count])
                count += 1
    return out[:count]


@njit(cache=True)
def a2_block(D, a, b, reps_a, orbit_b, unit_list):
    """Canonical forms of the empty gluings ``b*ra + a*rb`` mod D."""
    cap = 64
    out = np.empty((cap, 5), dtype=np.int64)
    count = 0
    u = np.empty(5, dtype=np.int64)
    for i in range(reps_a.shape[0]):
        for j in range(orbit_b.shape[0]):
            for s in range(5):
                u[s] = (b * reps_a[i, s] + a * orbit_b[j, s]) % D
            if first_point(u, D) != 0:
                continue
            if count == cap:
                bigger = np.empty((2 * cap, 5), dtype=np.int64)
                bigger[:cap] = out
                out = bigger
                cap *= 2
            canonical_into(u, D, unit_list, out[count])
            count += 1
    return out[:count]


@njit(cache=True)
def width_search(u, D, cap):
    """Return (width, certificate) or (0, zeros) when the width exceeds ``cap``.

    Enumerates lam in {0..k}^n in lexicographic order and keeps those with
    min 0 and max k, matching the pure-Python search order.
    """
    n = u.shape[0]
    lam = np.zeros(n, dtype=np.int64)
    for k in range(1, cap + 1):
        for i in range(n):
            lam[i] = 0
        while True:
            lo = lam[0]
            hi = lam[0]
            s = 0
            for i in range(n):
                if lam[i] < lo:
                    lo = lam[i]
                if lam[i] > hi:
                    hi = lam[i]
                s += lam[i] * u[i]
            if lo == 0 and hi == k and s % D == 0:
                return k, lam.copy()
            # odometer increment, last slot fastest
            i = n - 1
            while i >= 0 and lam[i] == k:
                lam[i] = 0
                i -= 1
            if i < 0:
                break
            lam[i] += 1
    return 0, np.zeros(n, dtype=np.int64)
