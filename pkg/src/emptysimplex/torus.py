"""Residue tuples on the discrete torus T_D^d.

A tuple ``(u_0, ..., u_d)`` of residues mod ``D`` with zero sum encodes the
barycentric coordinates (scaled by ``D``) of a generator of the cyclic group
``Z^d / Lambda(P)`` of a lattice simplex ``P``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


@dataclass(frozen=True, order=True)
class ResidueTuple:
    modulus: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if len(self.entries) < 2:
            raise ValueError("a residue tuple needs at least two entries")
        if any(not 0 <= x < self.modulus for x in self.entries):
            raise ValueError(f"entries {self.entries} not reduced mod {self.modulus}")
        if sum(self.entries) % self.modulus:
            raise ValueError(f"entries {self.entries} do not sum to 0 mod {self.modulus}")

    @property
    def dim(self) -> int:
        return len(self.entries) - 1

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return render(self)

    def scaled(self, c: int) -> ResidueTuple:
        D = self.modulus
        return ResidueTuple(D, tuple(c * x % D for x in self.entries))

    def permuted(self, perm: Sequence[int]) -> ResidueTuple:
        return ResidueTuple(self.modulus, tuple(self.entries[i] for i in perm))


def make_tuple(D: int, raw: Iterable[int], length: int | None = None) -> ResidueTuple:
    """Reduce ``raw`` mod ``D`` and validate the zero-sum condition.

    ``length`` optionally pins the number of entries (5 for 4-simplices).
    """
    raw = tuple(int(x) for x in raw)
    if not raw:
        raise ValueError("empty residue sequence")
    if length is not None and len(raw) != length:
        raise ValueError(f"expected {length} entries, got {len(raw)}")
    if D < 1:
        raise ValueError(f"determinant must be positive, got {D}")
    return ResidueTuple(D, tuple(x % D for x in raw))


def parse_tuple(text: str) -> ResidueTuple:
    """Parse the ``D:u0 u1 ...`` rendering (entries may be negative or unreduced)."""
    try:
        head, body = text.split(":", 1)
        D = int(head)
        raw = [int(x) for x in body.replace(",", " ").split()]
    except ValueError as exc:
        raise ValueError(f"cannot parse tuple {text!r}; expected 'D:u0 u1 ...'") from exc
    return make_tuple(D, raw)


def render(t: ResidueTuple) -> str:
    return f"{t.modulus}:" + " ".join(map(str, t.entries))


def units(D: int) -> list[int]:
    """Residues coprime to ``D``; ``[0]`` stands in for the trivial group at D=1."""
    if D == 1:
        return [0]
    return [c for c in range(1, D) if gcd(c, D) == 1]


def is_primitive(t: ResidueTuple) -> bool:
    g = t.modulus
    for x in t.entries:
        g = gcd(g, x)
    return g == 1


def _require_primitive(t: ResidueTuple):
    if not is_primitive(t):
        raise ValueError(f"tuple {render(t)} is not primitive")


def canonical_form(t: ResidueTuple) -> ResidueTuple:
    """Lex-min of ``sorted(c*t mod D)`` over units ``c``.

    Sorting absorbs coordinate permutations, so two tuples generate
    equivalent simplices iff their canonical forms coincide.
    """
    _require_primitive(t)
    D = t.modulus
    best = None
    for c in units(D):
        key = tuple(sorted(c * x % D for x in t.entries))
        if best is None or key < best:
            best = key
    return ResidueTuple(D, best)


def is_canonical(t: ResidueTuple) -> bool:
    return is_primitive(t) and canonical_form(t) == t


def equivalent(t1: ResidueTuple, t2: ResidueTuple) -> bool:
    if t1.modulus != t2.modulus:
        raise ValueError(f"modulus mismatch: {t1.modulus} vs {t2.modulus}")
    if len(t1) != len(t2):
        raise ValueError("tuple length mismatch")
    return canonical_form(t1) == canonical_form(t2)


def orbit(t: ResidueTuple) -> set[ResidueTuple]:
    """All tuples obtained from ``t`` by a unit multiple and a permutation."""
    _require_primitive(t)
    D = t.modulus
    out = set()
    for c in units(D):
        scaled = tuple(c * x % D for x in t.entries)
        for p in set(itertools.permutations(scaled)):
            out.add(ResidueTuple(D, p))
    return out


def relax(t: ResidueTuple, a: int) -> ResidueTuple:
    """Reread ``t`` against the coarser lattice of index ``a``, a divisor of D."""
    if a < 1 or t.modulus % a:
        raise ValueError(f"{a} does not divide {t.modulus}")
    return ResidueTuple(a, tuple(x % a for x in t.entries))


def crt_combine(ta: ResidueTuple, tb: ResidueTuple) -> ResidueTuple:
    """Glue tuples mod coprime ``a`` and ``b`` into ``b*ta + a*tb`` mod ``ab``."""
    a, b = ta.modulus, tb.modulus
    if gcd(a, b) != 1:
        raise ValueError(f"moduli {a} and {b} are not coprime")
    if len(ta) != len(tb):
        raise ValueError("tuple length mismatch")
    _require_primitive(ta)
    _require_primitive(tb)
    return make_tuple(a * b, (b * x + a * y for x, y in zip(ta.entries, tb.entries)))
