"""Geometric readings of a residue tuple: vertex form, emptiness, width."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .torus import ResidueTuple, _require_primitive, make_tuple, render

DEFAULT_WIDTH_CAP = 5


@dataclass(frozen=True)
class VRepSimplex:
    """``conv(e_1, ..., e_n, v)`` in ``Z^n``; determinant ``sum(v) - 1``."""

    v: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        if self.determinant < 1:
            raise ValueError(f"degenerate or mis-oriented simplex: sum(v) - 1 = {self.determinant}")

    @property
    def determinant(self) -> int:
        return sum(self.v) - 1

    def vertices(self) -> list[tuple[int, ...]]:
        n = len(self.v)
        basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        return basis + [self.v]


@dataclass(frozen=True)
class WidthResult:
    width: int | None
    certificate: tuple[int, ...] | None
    cap: int

    @property
    def capped(self) -> bool:
        return self.width is None

    def label(self) -> str:
        return f">{self.cap}" if self.capped else str(self.width)


def tuple_of_vrep(s: VRepSimplex) -> ResidueTuple:
    return make_tuple(s.determinant, (-1, *s.v))


def vrep_of_tuple(u: ResidueTuple) -> VRepSimplex:
    """An equivalent ``Delta(v)`` built on the first unimodular facet of ``u``.

    The first three coordinates of ``v`` are least residues; the last one is
    fixed by ``sum(v) = D + 1`` and may be negative, as in the published table.
    """
    _require_primitive(u)
    D = u.modulus
    try:
        i = next(i for i, x in enumerate(u.entries) if gcd(x, D) == 1)
    except StopIteration:
        raise ValueError(f"{render(u)} has no unimodular facet") from None
    c = -pow(u.entries[i], -1, D) % D
    rest = [c * x % D for j, x in enumerate(u.entries) if j != i]
    rest[-1] = D + 1 - sum(rest[:-1])
    return VRepSimplex(tuple(rest))


def _representatives(u: ResidueTuple):
    """Yield ``(k, k*u mod D)`` for k = 1..D-1 with incremental updates."""
    D = u.modulus
    step = u.entries
    cur = list(step)
    for k in range(1, D):
        yield k, cur
        for i, x in enumerate(step):
            y = cur[i] + x
            cur[i] = y - D if y >= D else y


def lattice_classes_in_simplex(u: ResidueTuple) -> list[int]:
    """Multipliers ``k`` whose representative of ``k*u`` is a non-vertex lattice point."""
    _require_primitive(u)
    D = u.modulus
    return [k for k, rep in _representatives(u) if sum(rep) == D]


def first_lattice_class(u: ResidueTuple) -> int | None:
    _require_primitive(u)
    D = u.modulus
    for k, rep in _representatives(u):
        if sum(rep) == D:
            return k
    return None


def is_empty(u: ResidueTuple) -> bool:
    return first_lattice_class(u) is None


def width(u: ResidueTuple, cap: int = DEFAULT_WIDTH_CAP) -> WidthResult:
    """Smallest ``k`` with a non-constant ``lam in {0..k}^(d+1)``, ``sum(lam*u) = 0 mod D``.

    Candidates are normalized to ``min(lam) = 0`` and ``max(lam) = k``.
    """
    _require_primitive(u)
    if cap < 1:
        raise ValueError("cap must be at least 1")
    D, entries = u.modulus, u.entries
    n = len(entries)
    for k in range(1, cap + 1):
        for lam in itertools.product(range(k + 1), repeat=n):
            if k not in lam or 0 not in lam:
                continue
            if sum(a * b for a, b in zip(lam, entries)) % D == 0:
                return WidthResult(k, lam, cap)
    return WidthResult(None, None, cap)


def check_certificate(u: ResidueTuple, lam: Sequence[int]) -> int:
    """Validate a width certificate and return the width it witnesses."""
    lam = tuple(lam)
    if len(lam) != len(u):
        raise ValueError("certificate length mismatch")
    if min(lam) != 0 or max(lam) == 0:
        raise ValueError(f"certificate {lam} must have min 0 and be non-constant")
    if sum(a * b for a, b in zip(lam, u.entries)) % u.modulus:
        raise ValueError(f"certificate {lam} fails the congruence for {render(u)}")
    return max(lam)


def facet_volumes(u: ResidueTuple) -> tuple[int, ...]:
    """Normalized volume ``gcd(u_i, D)`` of the facet opposite each vertex."""
    _require_primitive(u)
    return tuple(gcd(x, u.modulus) for x in u.entries)


@dataclass(frozen=True)
class AffineFunctional:
    coeffs: tuple[int, ...]
    constant: int

    def __call__(self, x: Sequence[int]) -> int:
        return sum(c * xi for c, xi in zip(self.coeffs, x)) + self.constant


def functional_from_certificate(s: VRepSimplex, lam: Sequence[int]) -> AffineFunctional:
    """Integer affine functional taking value ``lam[j]`` on ``e_j`` and ``lam[0]`` on ``v``."""
    u = tuple_of_vrep(s)
    w = check_certificate(u, lam)
    D = s.determinant
    # f(x) = c.x + c0 with c_j = lam_j - c0 and c0 * (1 - sum v) = lam_0 - sum lam_j v_j
    c0 = Fraction(sum(l * x for l, x in zip(lam[1:], s.v)) - lam[0], D)
    coeffs = [Fraction(l) - c0 for l in lam[1:]]
    if c0.denominator != 1 or any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError(f"certificate {tuple(lam)} yields a non-integral functional")
    f = AffineFunctional(tuple(int(c) for c in coeffs), int(c0))
    values = [f(x) for x in s.vertices()]
    assert values == list(lam[1:]) + [lam[0]]
    assert max(values) - min(values) == w
    return f
