"""Flat-file store of per-determinant enumeration records.

Layout (one directory)::

    d{D}.txt       header + one canonical class per line
    manifest.txt   completed determinants, ascending
    timings.txt    "D seconds" per computed determinant (machine dependent)

Record header: ``D <D> algo <A1|A2:a,b> complete <0|1> classes <n>``.
Class line: ``<D>:<u0 .. u4> w=<width|>cap> facets=<D_1,..,D_5>``.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from pathlib import Path

_HEADER = re.compile(r"^D (\d+) algo (A1|A2:\d+,\d+) complete ([01]) classes (\d+)$")
_LINE = re.compile(r"^(\d+):([\d ]+) w=(>?\d+) facets=([\d,]+)$")


class StoreError(Exception):
    pass


@dataclass
class EnumerationRecord:
    determinant: int
    algorithm: str
    classes: list[tuple[int, ...]]
    widths: list[int | None]
    facets: list[tuple[int, ...]]
    complete: bool = True
    cap: int = 5
    seconds: float | None = field(default=None, compare=False)
    candidates: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if not (len(self.classes) == len(self.widths) == len(self.facets)):
            raise ValueError("classes, widths and facets must align")

    def render(self) -> str:
        D = self.determinant
        lines = [f"D {D} algo {self.algorithm} complete {int(self.complete)} classes {len(self.classes)}"]
        for cls, w, fv in zip(self.classes, self.widths, self.facets):
            wl = f">{self.cap}" if w is None else str(w)
            lines.append(f"{D}:{' '.join(map(str, cls))} w={wl} facets={','.join(map(str, fv))}")
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> EnumerationRecord:
        lines = text.splitlines()
        if not lines:
            raise StoreError("empty record")
        m = _HEADER.match(lines[0])
        if not m:
            raise StoreError(f"bad header: {lines[0]!r}")
        D, algo, complete, n = int(m[1]), m[2], m[3] == "1", int(m[4])
        classes, widths, facets = [], [], []
        cap = 5
        for line in lines[1:]:
            lm = _LINE.match(line)
            if not lm or int(lm[1]) != D:
                raise StoreError(f"bad class line in record {D}: {line!r}")
            classes.append(tuple(int(x) for x in lm[2].split()))
            if lm[3].startswith(">"):
                cap = int(lm[3][1:])
                widths.append(None)
            else:
                widths.append(int(lm[3]))
            facets.append(tuple(int(x) for x in lm[4].split(",")))
        if len(classes) != n:
            raise StoreError(f"record {D} announces {n} classes, holds {len(classes)}")
        return cls(D, algo, classes, widths, facets, complete, cap)


def _atomic_write(path: Path, text: str):
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text)
    os.replace(tmp, path)


class Store:
    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def path(self, D: int) -> Path:
        return self.root / f"d{D}.txt"

    def load(self, D: int) -> EnumerationRecord | None:
        p = self.path(D)
        if not p.exists():
            return None
        rec = EnumerationRecord.parse(p.read_text())
        if rec.determinant != D:
            raise StoreError(f"{p} holds determinant {rec.determinant}")
        return rec

    def has_complete(self, D: int) -> bool:
        rec = self.load(D)
        return rec is not None and rec.complete

    def save(self, rec: EnumerationRecord):
        _atomic_write(self.path(rec.determinant), rec.render())
        if rec.complete:
            done = set(self.manifest())
            done.add(rec.determinant)
            _atomic_write(self.root / "manifest.txt", "".join(f"{d}\n" for d in sorted(done)))
        if rec.seconds is not None:
            times = self.timings()
            times[rec.determinant] = rec.seconds
            _atomic_write(
                self.root / "timings.txt",
                "".join(f"{d} {t:.6f}\n" for d, t in sorted(times.items())),
            )

    def manifest(self) -> list[int]:
        """Completed determinants whose record file is still present."""
        p = self.root / "manifest.txt"
        if not p.exists():
            return []
        listed = [int(x) for x in p.read_text().split()]
        return [d for d in listed if self.path(d).exists()]

    def timings(self) -> dict[int, float]:
        p = self.root / "timings.txt"
        out = {}
        if p.exists():
            for line in p.read_text().splitlines():
                d, t = line.split()
                out[int(d)] = float(t)
        return out

    def covered_up_to(self) -> int:
        """Largest N such that every D in 1..N has a complete record."""
        done = set(self.manifest())
        n = 0
        while n + 1 in done:
            n += 1
        return n

    def records(self, dmax: int | None = None):
        for d in self.manifest():
            if dmax is None or d <= dmax:
                rec = self.load(d)
                if rec is not None and rec.complete:
                    yield rec
