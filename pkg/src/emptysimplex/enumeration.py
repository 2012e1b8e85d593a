"""Per-determinant enumeration of empty 4-simplices.

Two routes, both pruned by the emptiness test and deduplicated by canonical
form:

* Algorithm 1 scans the quintuples ``(-1, v1, v2, v3, v4)`` (valid whenever
  D has at most four distinct prime factors, so that an empty simplex has a
  unimodular facet).
* Algorithm 2 glues every empty class mod ``a`` with the full orbit of every
  empty class mod ``b`` for a coprime split ``D = a*b``.
"""
from __future__ import annotations

import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping

import numpy as np

from . import kernels
from .simplex import DEFAULT_WIDTH_CAP, facet_volumes
from .store import EnumerationRecord, Store
from .torus import ResidueTuple, units

log = logging.getLogger(__name__)

QUINTUPLE = 5


@dataclass(frozen=True)
class SplitChoice:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 2 or self.b < 2 or gcd(self.a, self.b) != 1:
            raise ValueError(f"invalid split ({self.a}, {self.b})")

    @property
    def determinant(self) -> int:
        return self.a * self.b

    def label(self) -> str:
        return f"A2:{self.a},{self.b}"


class DependencyError(Exception):
    """Algorithm 2 was asked to run before its divisor records exist."""


def factorize(n: int) -> dict[int, int]:
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def choose_split(D: int) -> SplitChoice | None:
    """Coprime ``a*b = D`` with the smallest gap ``b - a``; None for prime powers."""
    blocks = [p**e for p, e in factorize(D).items()]
    if len(blocks) < 2:
        return None
    best = None
    for mask in range(1, 2 ** len(blocks) - 1):
        a = 1
        for i, q in enumerate(blocks):
            if mask >> i & 1:
                a *= q
        b = D // a
        if a > b:
            continue
        if best is None or b - a < best[1] - best[0]:
            best = (a, b)
    return SplitChoice(*best)


def _unit_array(D: int) -> np.ndarray:
    return np.array(units(D), dtype=np.int64)


def _dedupe(blocks: Iterable[np.ndarray]) -> list[tuple[int, ...]]:
    seen = set()
    for arr in blocks:
        seen.update(map(tuple, arr.tolist()))
    return sorted(seen)


def _a1_task(args):
    D, lo, hi, sorted_only = args
    return kernels.a1_block(D, lo, hi, sorted_only, _unit_array(D))


def _v1_blocks(D: int, jobs: int) -> list[tuple[int, int]]:
    nblocks = max(1, min(D, 4 * jobs))
    edges = np.linspace(0, D, nblocks + 1).round().astype(int)
    return [(int(lo), int(hi)) for lo, hi in zip(edges[:-1], edges[1:]) if hi > lo]


def _run(tasks, fn, jobs):
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))


def algorithm1(D: int, jobs: int = 1, sorted_only: bool = True) -> list[tuple[int, ...]]:
    """Canonical empty classes of determinant ``D`` by direct scan.

    ``sorted_only`` restricts the scan to ``v1 <= v2 <= v3 <= v4``; the
    unrestricted scan is kept for the equivalence test.
    """
    if D < 1:
        raise ValueError("determinant must be positive")
    if len(factorize(D)) >= 5:
        raise ValueError(f"D={D} has five or more prime factors; a unimodular facet is not guaranteed")
    tasks = [(D, lo, hi, sorted_only) for lo, hi in _v1_blocks(D, jobs)]
    return _dedupe(_run(tasks, _a1_task, jobs))


def full_orbit_array(t: Iterable[int], D: int) -> np.ndarray:
    base = np.array(list(t), dtype=np.int64)
    scaled = (np.outer(_unit_array(D), base) % D) if D > 1 else base[None, :]
    perms = np.array(list(itertools.permutations(range(len(base)))), dtype=np.int64)
    allrows = scaled[:, perms].reshape(-1, len(base))
    return np.unique(allrows, axis=0)


def _classes_of(store, n: int) -> list[tuple[int, ...]]:
    if isinstance(store, Mapping):
        if n not in store:
            raise DependencyError(f"no record for determinant {n}")
        return list(store[n])
    rec = store.load(n)
    if rec is None or not rec.complete:
        raise DependencyError(f"no complete record for determinant {n}")
    return rec.classes


def _a2_task(args):
    D, a, b, reps_a, orbit_b = args
    return kernels.a2_block(D, a, b, reps_a, orbit_b, _unit_array(D))


def algorithm2(D: int, split: SplitChoice, store, jobs: int = 1) -> list[tuple[int, ...]]:
    """Canonical empty classes of determinant ``D`` by gluing classes mod ``a`` and ``b``.

    ``store`` is a :class:`Store` or a mapping ``determinant -> classes``.
    The gluing is symmetric in the two factors, so the full orbits are taken
    on whichever side gives fewer candidates.
    """
    if split is None or split.determinant != D:
        raise ValueError(f"split {split} does not factor D={D}")
    a, b = split.a, split.b
    classes = {a: _classes_of(store, a), b: _classes_of(store, b)}
    orbit_cost = {n: len(classes[n]) * len(units(n)) for n in (a, b)}
    if orbit_cost[a] < orbit_cost[b]:
        a, b = b, a
    reps_a = np.array(classes[a], dtype=np.int64).reshape(-1, QUINTUPLE)
    orbits = [full_orbit_array(cls, b) for cls in classes[b]]
    orbit_b = np.concatenate(orbits) if orbits else np.empty((0, QUINTUPLE), dtype=np.int64)
    tasks = [(D, a, b, reps_a[lo:hi], orbit_b) for lo, hi in _v1_blocks(len(reps_a), jobs)]
    return _dedupe(_run(tasks, _a2_task, jobs))


def class_widths(classes, D: int, cap: int = DEFAULT_WIDTH_CAP) -> list[int | None]:
    out = []
    for cls in classes:
        w, _ = kernels.width_search(np.array(cls, dtype=np.int64), D, cap)
        out.append(int(w) if w else None)
    return out


def build_record(D: int, classes, algorithm: str, seconds: float | None = None,
                 cap: int = DEFAULT_WIDTH_CAP) -> EnumerationRecord:
    classes = sorted(tuple(c) for c in classes)
    facets = [facet_volumes(ResidueTuple(D, c)) for c in classes]
    return EnumerationRecord(D, algorithm, classes, class_widths(classes, D, cap), facets,
                             complete=True, cap=cap, seconds=seconds)


def enumerate_determinant(D: int, store: Store, algorithm: str = "auto", jobs: int = 1,
                          cap: int = DEFAULT_WIDTH_CAP) -> EnumerationRecord:
    split = choose_split(D)
    use_a2 = False
    if algorithm == "a2":
        if split is None:
            raise ValueError(f"D={D} is a prime power; algorithm 2 does not apply")
        use_a2 = True
    elif algorithm == "auto":
        use_a2 = split is not None and store.has_complete(split.a) and store.has_complete(split.b)
    elif algorithm != "a1":
        raise ValueError(f"unknown algorithm {algorithm!r}")

    t0 = time.perf_counter()
    if use_a2:
        classes, label = algorithm2(D, split, store, jobs), split.label()
    else:
        classes, label = algorithm1(D, jobs), "A1"
    rec = build_record(D, classes, label, cap=cap)
    rec.seconds = time.perf_counter() - t0
    return rec


@dataclass
class RangeReport:
    computed: list[int]
    skipped: list[int]
    errors: dict[int, str]


def enumerate_range(dmin: int, dmax: int, store: Store, jobs: int = 1, algorithm: str = "auto",
                    cap: int = DEFAULT_WIDTH_CAP, progress=None) -> RangeReport:
    """Fill ``store`` with complete records for every D in ``[dmin, dmax]``.

    Determinants with a complete record are skipped, so an interrupted run
    resumes where it stopped.
    """
    if dmin < 1:
        raise ValueError("dmin must be at least 1")
    report = RangeReport([], [], {})
    for D in range(dmin, dmax + 1):
        try:
            if store.has_complete(D):
                report.skipped.append(D)
                continue
            rec = enumerate_determinant(D, store, algorithm, jobs, cap)
            store.save(rec)
        except Exception as exc:  # keep going; the failure is reported per determinant
            log.error("determinant %d failed: %s", D, exc)
            report.errors[D] = f"{type(exc).__name__}: {exc}"
            continue
        report.computed.append(D)
        log.info("D=%d %s classes=%d %.3fs", D, rec.algorithm, len(rec.classes), rec.seconds)
        if progress is not None:
            progress(rec)
    return report


@dataclass(frozen=True)
class WideClass:
    determinant: int
    tuple: ResidueTuple
    width: int | None


def wide_filter(records: Iterable[EnumerationRecord], threshold: int = 3) -> list[WideClass]:
    """Classes of width at least ``threshold``; capped widths count as wide."""
    out = []
    for rec in records:
        for cls, w in zip(rec.classes, rec.widths):
            if (w is None and threshold <= rec.cap + 1) or (w is not None and w >= threshold):
                out.append(WideClass(rec.determinant, ResidueTuple(rec.determinant, cls), w))
    out.sort(key=lambda c: (c.determinant, c.tuple.entries))
    return out
