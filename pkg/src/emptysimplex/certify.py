"""Combine the volume cap with enumeration coverage into a completeness verdict."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import simplex_volume_cap
from .catalog import VerificationReport, diff_store

PUBLISHED_COVERAGE = 7600


@dataclass
class Certificate:
    coverage: int
    cap: int
    diff: VerificationReport

    @property
    def complete(self) -> bool:
        return self.coverage >= self.cap and self.diff.ok

    @property
    def gap(self) -> tuple[int, int] | None:
        return None if self.coverage >= self.cap else (self.coverage, self.cap)

    def lines(self) -> list[str]:
        out = [
            f"volume cap for width >= 3: {self.cap}",
            f"published enumeration coverage: D <= {PUBLISHED_COVERAGE}",
            f"store coverage: D <= {self.coverage}",
            f"catalog diff: {'empty' if self.diff.ok else f'{len(self.diff.failures)} differences'}",
        ]
        out += [f"  {f}" for f in self.diff.failures]
        if self.complete:
            out.append("classification complete")
        elif self.gap:
            out.append(f"classification incomplete: gap ({self.gap[0]}, {self.gap[1]}]")
        else:
            out.append("classification incomplete: store disagrees with catalog")
        return out


def completeness_certificate(coverage_dmax: int, store) -> Certificate:
    """Verdict for a store claimed complete up to ``coverage_dmax``.

    Coverage is clipped to what the store actually holds.
    """
    coverage = min(coverage_dmax, store.covered_up_to())
    diff = diff_store(store, coverage)
    return Certificate(coverage, simplex_volume_cap(), diff)


@dataclass
class Extrapolation:
    exponent: float
    prefactor: float
    samples: int

    def seconds(self, D: int) -> float:
        return self.prefactor * D**self.exponent

    def total_seconds(self, dmax: int, dmin: int = 1) -> float:
        return float(sum(self.seconds(d) for d in range(dmin, dmax + 1)))


def extrapolate(timings: dict[int, float], dmin: int = 20) -> Extrapolation | None:
    """Least-squares line through ``(log D, log seconds)`` of the measured records."""
    pts = [(d, t) for d, t in timings.items() if d >= dmin and t > 0]
    if len(pts) < 2:
        return None
    x = np.log([d for d, _ in pts])
    y = np.log([t for _, t in pts])
    slope, icept = np.polyfit(x, y, 1)
    return Extrapolation(float(slope), math.exp(icept), len(pts))
