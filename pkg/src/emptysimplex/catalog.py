"""The 179 known empty 4-simplices of width at least three, and checks against it."""
from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources

from .enumeration import wide_filter
from .simplex import VRepSimplex, is_empty, tuple_of_vrep, width
from .torus import ResidueTuple, canonical_form, render

DATA_FILE = "wide_simplices.txt"
DATA_SHA256 = "87ffe9be645d9db1f45a1efe6f229a92c5e7d1bed8e52954a646fc9c86b7d84a"
EXPECTED_COUNT = 179
EXPECTED_WIDTHS = {3: 178, 4: 1}
DET_RANGE = (41, 179)


@dataclass(frozen=True)
class CatalogEntry:
    v: tuple[int, ...]
    expected_width: int

    @property
    def determinant(self) -> int:
        return sum(self.v) - 1

    def simplex(self) -> VRepSimplex:
        return VRepSimplex(self.v)


def _normalized(text: str) -> list[list[str]]:
    rows = []
    for line in text.splitlines():
        toks = line.split("#", 1)[0].split()
        if toks:
            rows.append(toks)
    return rows


def parse_catalog(text: str) -> list[CatalogEntry]:
    out = []
    for toks in _normalized(text):
        marked = toks[-1] == "*"
        nums = toks[:-1] if marked else toks
        if len(nums) != 4:
            raise ValueError(f"catalog line needs four integers: {' '.join(toks)!r}")
        out.append(CatalogEntry(tuple(int(x) for x in nums), 4 if marked else 3))
    return out


def catalog_text() -> str:
    return resources.files(__package__).joinpath("data").joinpath(DATA_FILE).read_text()


def catalog_checksum(text: str | None = None) -> str:
    rows = _normalized(catalog_text() if text is None else text)
    return hashlib.sha256("".join(" ".join(r) + "\n" for r in rows).encode()).hexdigest()


def catalog() -> list[CatalogEntry]:
    text = catalog_text()
    if catalog_checksum(text) != DATA_SHA256:
        raise RuntimeError(f"{DATA_FILE} does not match its recorded checksum")
    return parse_catalog(text)


def catalog_classes(dmax: int | None = None, entries=None) -> dict[ResidueTuple, CatalogEntry]:
    entries = catalog() if entries is None else entries
    out = {}
    for e in entries:
        if dmax is None or e.determinant <= dmax:
            out[canonical_form(tuple_of_vrep(e.simplex()))] = e
    return out


@dataclass
class EntryVerdict:
    entry: CatalogEntry
    determinant_ok: bool = False
    empty: bool = False
    width: int | None = None
    canonical: ResidueTuple | None = None
    unique: bool = True

    @property
    def ok(self) -> bool:
        return (self.determinant_ok and self.empty and self.unique
                and self.width == self.entry.expected_width)


@dataclass
class VerificationReport:
    entries: list[EntryVerdict] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    widths: Counter = field(default_factory=Counter)
    only_store: list[str] = field(default_factory=list)
    only_catalog: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [f"FAIL {msg}" for msg in self.failures]
        if self.widths:
            out.append(f"entries {sum(self.widths.values())} widths "
                       + " ".join(f"{w}:{n}" for w, n in sorted(self.widths.items(), key=str)))
        out.append("PASS" if self.ok else f"FAILED {len(self.failures)}")
        return out


def verify_catalog(entries: list[CatalogEntry] | None = None) -> VerificationReport:
    entries = catalog() if entries is None else entries
    report = VerificationReport()
    seen: dict[ResidueTuple, int] = {}
    for i, e in enumerate(entries):
        ev = EntryVerdict(e)
        report.entries.append(ev)
        D = e.determinant
        ev.determinant_ok = DET_RANGE[0] <= D <= DET_RANGE[1]
        if not ev.determinant_ok:
            report.failures.append(f"entry {i} {e.v}: determinant {D} outside {DET_RANGE}")
        if D < 1:
            continue
        u = tuple_of_vrep(e.simplex())
        ev.empty = is_empty(u)
        if not ev.empty:
            report.failures.append(f"entry {i} {e.v}: not empty")
        ev.width = width(u).width
        report.widths[ev.width] += 1
        if ev.width != e.expected_width:
            report.failures.append(f"entry {i} {e.v}: width {ev.width}, expected {e.expected_width}")
        ev.canonical = canonical_form(u)
        if ev.canonical in seen:
            ev.unique = False
            report.failures.append(f"entry {i} {e.v}: equivalent to entry {seen[ev.canonical]}")
        else:
            seen[ev.canonical] = i
    if len(entries) != EXPECTED_COUNT:
        report.failures.append(f"catalog has {len(entries)} entries, expected {EXPECTED_COUNT}")
    if dict(report.widths) != EXPECTED_WIDTHS:
        report.failures.append(f"width histogram {dict(report.widths)}, expected {EXPECTED_WIDTHS}")
    return report


def store_wide_classes(store, dmax: int, threshold: int = 3) -> dict[ResidueTuple, int | None]:
    return {c.tuple: c.width for c in wide_filter(store.records(dmax), threshold)}


def diff_store(store, dmax: int, entries=None) -> VerificationReport:
    """Compare the store's wide classes with the catalog, both cut at ``dmax``."""
    report = VerificationReport()
    covered = store.covered_up_to()
    if covered < dmax:
        report.failures.append(f"store is complete only up to D={covered} < {dmax}")
    found = store_wide_classes(store, dmax)
    known = catalog_classes(dmax, entries)
    for t in sorted(set(found) - set(known)):
        report.only_store.append(f"{render(t)} w={found[t]}")
    for t in sorted(set(known) - set(found)):
        report.only_catalog.append(f"{render(t)} v={known[t].v}")
    for t, w in found.items():
        if t in known and w != known[t].expected_width:
            report.failures.append(f"{render(t)}: store width {w}, catalog {known[t].expected_width}")
        report.widths[w] += 1
    report.failures += [f"only in store: {s}" for s in report.only_store]
    report.failures += [f"only in catalog: {s}" for s in report.only_catalog]
    return report
