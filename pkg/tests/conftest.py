import pytest

from emptysimplex.enumeration import enumerate_range
from emptysimplex.store import Store

FULL_DMAX = 200


@pytest.fixture(scope="session")
def full_store(tmp_path_factory):
    """Complete store for D <= 200, built once per session."""
    store = Store(tmp_path_factory.mktemp("store200"))
    report = enumerate_range(1, FULL_DMAX, store)
    assert not report.errors
    return store


@pytest.fixture(scope="session")
def full_records(full_store):
    return {rec.determinant: rec for rec in full_store.records()}


_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    key = mark.args
    if report.when == "call" or report.failed:
        prev = _CRITERIA.get(key, True)
        _CRITERIA[key] = prev and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (n, title), ok in sorted(_CRITERIA.items()):
        terminalreporter.write_line(f"criterion {n} {'PASS' if ok else 'FAIL'}: {title}")
