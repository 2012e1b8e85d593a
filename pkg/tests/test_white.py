from fractions import Fraction
from itertools import permutations
from math import gcd

import pytest

from emptysimplex.simplex import is_empty, width
from emptysimplex.torus import canonical_form, units
from emptysimplex.white import (
    crosscheck_white, white_classes, white_orbit_count, white_tuple, white_vertices,
)


def det(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = Fraction(1)
        for i in range(n):
            prod *= m[i][perm[i]]
        total += sign * prod
    return total


def barycentric(point, verts):
    """Cramer's rule on the homogenized 4x4 system."""
    a = [[Fraction(v[i]) for v in verts] for i in range(3)] + [[Fraction(1)] * 4]
    rhs = [Fraction(x) for x in point] + [Fraction(1)]
    d = det(a)
    out = []
    for j in range(4):
        m = [row[:j] + [rhs[i]] + row[j + 1:] for i, row in enumerate(a)]
        out.append(det(m) / d)
    return out


def group_orbits(q):
    """Orbits of the group generated by p -> -p and p -> 1/p, by closure."""
    left, count = set(units(q)), 0
    while left:
        frontier = {left.pop()}
        orbit = set(frontier)
        while frontier:
            p = frontier.pop()
            for x in (-p % q, pow(p, -1, q) if q > 1 else 0):
                if x not in orbit:
                    orbit.add(x)
                    frontier.add(x)
        left -= orbit
        count += 1
    return count


@pytest.mark.parametrize("p, q", [(1, 2), (2, 5), (3, 7), (5, 12), (7, 30), (1, 1)])
def test_closed_form_matches_barycentric_solve(p, q):
    bary = barycentric((0, 1, 0), white_vertices(p, q))
    scaled = [int(b * q) for b in bary]
    assert all(b * q == s for b, s in zip(bary, scaled))
    assert white_tuple(p, q).entries == tuple(x % q for x in scaled)


def test_examples():
    assert white_tuple(1, 2).entries == (1, 1, 1, 1)
    assert white_tuple(1, 1).entries == (0, 0, 0, 0)
    assert white_tuple(2, 5).entries == (2, 3, 4, 1)
    with pytest.raises(ValueError):
        white_tuple(2, 4)


@pytest.mark.parametrize("q", [1, 2, 5, 7, 12, 35])
def test_orbit_counts(q):
    assert white_orbit_count(q) == group_orbits(q)
    assert len(white_classes(q)) == group_orbits(q)


def test_class_counts_small():
    assert len(white_classes(2)) == 1
    assert len(white_classes(7)) == 2  # {1, 6}, {2, 3, 4, 5}


def test_representatives_sum_to_2q():
    for q in range(2, 30):
        for p in units(q):
            t = white_tuple(p, q)
            for k in range(1, q):
                assert sum(k * x % q for x in t) == 2 * q


def test_width_one_certificate():
    for q in range(2, 30):
        for p in units(q):
            t = white_tuple(p, q)
            assert (t[2] + t[3]) % q == 0
            assert width(t).width == 1


def test_equivalence_respects_white():
    for q in range(2, 40):
        for p in units(q):
            base = canonical_form(white_tuple(p, q))
            inv = pow(p, -1, q)
            for p2 in (-p % q, inv, -inv % q):
                assert canonical_form(white_tuple(p2, q)) == base


def test_crosscheck():
    assert crosscheck_white(1)
    assert crosscheck_white(2)
    assert all(is_empty(white_tuple(p, 11)) for p in units(11))
