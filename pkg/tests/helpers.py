from emptysimplex.catalog import catalog_classes
from emptysimplex.store import EnumerationRecord


class FakeStore:
    """Store stand-in holding only the catalog's wide classes."""

    def __init__(self, coverage, drop=0):
        self.coverage = coverage
        classes = catalog_classes()
        self.by_det = {}
        for t, e in list(classes.items())[drop:]:
            self.by_det.setdefault(t.modulus, []).append((t.entries, e.expected_width))

    def covered_up_to(self):
        return self.coverage

    def records(self, dmax=None):
        for d, items in sorted(self.by_det.items()):
            if dmax is None or d <= dmax:
                items = sorted(items)
                yield EnumerationRecord(d, "A1", [c for c, _ in items], [w for _, w in items],
                                        [(1,) * 5] * len(items))
