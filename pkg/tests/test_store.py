import pytest

from emptysimplex.store import EnumerationRecord, Store, StoreError


def sample():
    return EnumerationRecord(
        101, "A1", [(0, 1, 1, 100, 100), (1, 36, 84, 87, 95)], [1, 4],
        [(101, 1, 1, 1, 1), (1, 1, 1, 1, 1)], seconds=0.5,
    )


def test_render_format():
    text = sample().render()
    assert text.splitlines() == [
        "D 101 algo A1 complete 1 classes 2",
        "101:0 1 1 100 100 w=1 facets=101,1,1,1,1",
        "101:1 36 84 87 95 w=4 facets=1,1,1,1,1",
    ]


def test_round_trip():
    rec = sample()
    assert EnumerationRecord.parse(rec.render()) == rec


def test_capped_width_round_trip():
    rec = EnumerationRecord(6, "A2:2,3", [(0, 1, 1, 2, 2)], [None], [(6, 1, 1, 2, 2)])
    assert "w=>5" in rec.render()
    assert EnumerationRecord.parse(rec.render()).widths == [None]


@pytest.mark.parametrize("text", [
    "",
    "D 5 algo A3 complete 1 classes 0\n",
    "D 5 algo A1 complete 1 classes 1\n",
    "D 5 algo A1 complete 1 classes 1\n6:0 1 1 2 2 w=1 facets=1,1,1,1,1\n",
])
def test_parse_rejects(text):
    with pytest.raises(StoreError):
        EnumerationRecord.parse(text)


def test_store_files(tmp_path):
    store = Store(tmp_path)
    store.save(sample())
    assert (tmp_path / "d101.txt").exists()
    assert store.manifest() == [101]
    assert store.timings() == {101: 0.5}
    assert store.load(101) == sample()
    assert store.load(7) is None
    assert store.covered_up_to() == 0


def test_incomplete_not_in_manifest(tmp_path):
    store = Store(tmp_path)
    rec = sample()
    rec.complete = False
    store.save(rec)
    assert store.manifest() == []
    assert not store.has_complete(101)
