"""Brute-force lattice geometry on explicit coordinates.

Slow on purpose: membership is decided by exact integer barycentric
coordinates over a full bounding-box scan. Used to cross-check the
congruence tests on small determinants.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from .simplex import VRepSimplex

DEFAULT_RADIUS = 6
_CHUNK = 1 << 18


def _inverse(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    a = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("vertices are affinely dependent")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def barycentric_matrix(vertices) -> tuple[np.ndarray, int]:
    """Integer matrix ``B`` and scale ``s > 0`` with ``bary(x) = B @ (x, 1) / s``."""
    n = len(vertices) - 1
    m = [[Fraction(vertices[j][i]) for j in range(n + 1)] for i in range(n)]
    m.append([Fraction(1)] * (n + 1))
    inv = _inverse(m)
    s = 1
    for row in inv:
        for x in row:
            s = s * x.denominator // np.gcd(s, x.denominator)
    return np.array([[int(x * s) for x in row] for row in inv], dtype=np.int64), int(s)


def oracle_lattice_points(s: VRepSimplex) -> list[tuple[int, ...]]:
    """All non-vertex integer points of the simplex, in the box around its vertices.

    Barycentric coordinates are ordered like residue tuples: slot 0 is ``v``.
    """
    verts = [s.v] + s.vertices()[:-1]
    B, _ = barycentric_matrix(verts)
    arr = np.array(verts, dtype=np.int64)
    lo, hi = arr.min(axis=0), arr.max(axis=0)
    axes = [np.arange(a, b + 1, dtype=np.int64) for a, b in zip(lo, hi)]
    vertex_set = set(map(tuple, verts))
    found = []
    # iterate the first coordinate in slabs to bound memory
    rest = np.stack(np.meshgrid(*axes[1:], indexing="ij"), axis=-1).reshape(-1, len(axes) - 1)
    ones = np.ones((len(rest), 1), dtype=np.int64)
    for x0 in axes[0]:
        pts = np.hstack([np.full((len(rest), 1), x0, dtype=np.int64), rest, ones])
        for start in range(0, len(pts), _CHUNK):
            block = pts[start:start + _CHUNK]
            bary = block @ B.T
            inside = np.all(bary >= 0, axis=1)
            for p in block[inside, :-1]:
                t = tuple(int(c) for c in p)
                if t not in vertex_set:
                    found.append(t)
    return sorted(found)


def oracle_is_empty(s: VRepSimplex) -> bool:
    return not oracle_lattice_points(s)


def oracle_width_upper(s: VRepSimplex, radius: int = DEFAULT_RADIUS) -> int:
    """Least spread ``max - min`` over vertices of nonzero functionals in ``[-r, r]^n``."""
    if radius < 1:
        raise ValueError("radius must be at least 1")
    verts = np.array(s.vertices(), dtype=np.int64)
    n = verts.shape[1]
    rng = np.arange(-radius, radius + 1, dtype=np.int64)
    coeffs = np.array(list(itertools.product(rng, repeat=n)), dtype=np.int64)
    coeffs = coeffs[np.any(coeffs != 0, axis=1)]
    values = coeffs @ verts.T
    spread = values.max(axis=1) - values.min(axis=1)
    return int(spread.min())


def _det(m) -> int:
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det([row[:j] + row[j + 1:] for row in m[1:]])
               for j in range(len(m)))


def oracle_facet_volumes(s: VRepSimplex) -> tuple[int, ...]:
    """Lattice volume of each facet: gcd of the maximal minors of its edge vectors.

    Facets are listed opposite ``v``, ``e_1``, ..., ``e_n`` (residue-tuple order).
    """
    verts = [s.v] + s.vertices()[:-1]
    n = len(s.v)
    out = []
    for i in range(len(verts)):
        face = [verts[j] for j in range(len(verts)) if j != i]
        edges = [[a - b for a, b in zip(p, face[0])] for p in face[1:]]
        g = 0
        for cols in itertools.combinations(range(n), n - 1):
            g = np.gcd(g, _det([[row[c] for c in cols] for row in edges]))
        out.append(int(g))
    return tuple(out)
