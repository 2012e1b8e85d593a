"""Closed-form volume bounds behind the finiteness threshold for width 3.

Euclidean-volume bounds for hollow 3-bodies of large width, the bound on the
normalized volume of a non-projecting empty 4-simplex in terms of its
rational-diameter parameter ``lam``, and the resulting integer cap.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

TOL = 1e-9

# Width below which hollow 3-bodies of arbitrary volume exist.
HOLLOW3_MIN_WIDTH = 1 + 2 / math.sqrt(3)
# Switch point between the two regimes of the hollow 3-body bound.
HOLLOW3_REGIME_SWITCH = (2 / math.sqrt(3)) * (math.sqrt(5) - 1) + 1

LAMBDA_LOWER = Fraction(1, 42)
LAMBDA_BRANCH = 0.19
PROJECTING_CAP = 27
# vol(K - K) / vol(K) for a square pyramid; shows the factor 12 below is near sharp.
SQUARE_PYRAMID_DIFFERENCE_FACTOR = 14


@dataclass(frozen=True)
class BoundEvaluation:
    input: float
    regime: str
    value: float


@lru_cache(maxsize=None)
def sylvester(i: int) -> int:
    """s_1 = 2, s_{n+1} = s_n (s_n - 1) + 1."""
    if i < 1:
        raise ValueError("Sylvester index starts at 1")
    if i == 1:
        return 2
    s = sylvester(i - 1)
    return s * (s - 1) + 1


def hollow3_volume_bound(w: float, five_point: bool = False) -> BoundEvaluation:
    """Upper bound on vol(K) for a hollow convex 3-body K of lattice width ``w``.

    ``five_point`` uses the sharper constant for the convex hull of five
    points spanning R^3.
    """
    if w <= HOLLOW3_MIN_WIDTH:
        raise ValueError(f"no volume bound for width {w} <= 1 + 2/sqrt(3)")
    if w >= HOLLOW3_REGIME_SWITCH:
        num = Fraction(16, 3) if five_point else 8
        value = float(num) * w**3 / (w - 1) ** 3
        regime = "large-width"
    else:
        num = 0.5 if five_point else 0.75
        value = num * w**3 / (w - HOLLOW3_MIN_WIDTH)
        regime = "small-width"
    return BoundEvaluation(w, ("five-point " if five_point else "general ") + regime, value)


def direct_sum_rs_coefficient(p: int, q: int) -> int:
    """Lower bound on vol(K - K) / vol(K) for the hull of d+2 points with Radon split (p, q)."""
    if p < 0 or q < 0 or p + q != 3:
        raise ValueError("need nonnegative p, q with p + q = 3")
    return math.comb(2 * p, p) * math.comb(2 * q, q)


def lambda_volume_bound_exact(lam: Fraction) -> Fraction:
    lam = Fraction(lam)
    if not 0 < lam < Fraction(2, 3):
        raise ValueError("lam must lie in (0, 2/3)")
    return Fraction(2**5 * 3**3) / ((2 - 3 * lam) ** 3 * lam)


def lambda_volume_bound(lam: float) -> BoundEvaluation:
    """Normalized-volume bound 2^5 3^3 / ((2 - 3 lam)^3 lam) for a non-projecting simplex."""
    if not 0 < lam < 2 / 3:
        raise ValueError("lam must lie in (0, 2/3); the bound has a pole at 2/3")
    return BoundEvaluation(lam, "lambda", 2**5 * 3**3 / ((2 - 3 * lam) ** 3 * lam))


def large_lambda_branch(lam: float = LAMBDA_BRANCH) -> float:
    """Bound 24 * 16 / (70 lam^4) used when lam >= 0.19."""
    return 24 * 16 / (70 * lam**4)


def simplex_volume_cap() -> int:
    """Largest normalized volume an empty 4-simplex of width >= 3 can have."""
    small = math.floor(lambda_volume_bound_exact(LAMBDA_LOWER))
    large = math.floor(large_lambda_branch())
    return max(small, large, PROJECTING_CAP)


def table(fn, xs):
    return [(x, fn(x).value) for x in xs]
