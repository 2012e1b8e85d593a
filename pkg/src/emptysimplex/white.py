"""Empty lattice tetrahedra T(p, q) as a consistency check for the torus code.

``T(p, q) = conv{(0,0,0), (1,0,0), (0,0,1), (p,q,1)}``; every empty
tetrahedron is equivalent to one of these, and T(p, q) ~ T(p', q) iff
``p' = +-p^(+-1) mod q``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .simplex import is_empty, width
from .torus import ResidueTuple, canonical_form, make_tuple, units


def white_vertices(p: int, q: int):
    return [(0, 0, 0), (1, 0, 0), (0, 0, 1), (p, q, 1)]


def white_tuple(p: int, q: int) -> ResidueTuple:
    """Barycentric coordinates of ``(0, 1, 0)`` w.r.t. T(p, q), scaled by q."""
    if q < 1 or gcd(p, q) != 1:
        raise ValueError(f"T({p}, {q}) needs q >= 1 and gcd(p, q) = 1")
    return make_tuple(q, (p, q - p, q - 1, 1))


def white_classes(q: int) -> set[ResidueTuple]:
    return {canonical_form(white_tuple(p, q)) for p in units(q)}


def white_orbit_count(q: int) -> int:
    """Orbits of ``(Z/q)^*`` under ``p -> -p`` and ``p -> p^-1``."""
    if q <= 2:
        return 1
    seen, count = set(), 0
    for p in units(q):
        if p in seen:
            continue
        count += 1
        inv = pow(p, -1, q)
        seen.update({p, -p % q, inv, -inv % q})
    return count


@dataclass(frozen=True)
class WhiteCheck:
    q: int
    all_empty: bool
    all_width_one: bool
    classes: int
    orbits: int

    @property
    def ok(self) -> bool:
        return self.all_empty and self.all_width_one and self.classes == self.orbits


def white_report(q: int) -> WhiteCheck:
    tuples = [white_tuple(p, q) for p in units(q)]
    return WhiteCheck(
        q,
        all(is_empty(t) for t in tuples),
        all(width(t, cap=1).width == 1 for t in tuples),
        len(white_classes(q)),
        white_orbit_count(q),
    )


def crosscheck_white(q: int) -> bool:
    return white_report(q).ok
