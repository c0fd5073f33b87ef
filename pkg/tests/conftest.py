import pytest

from greedy_geom.engine import BACKEND

ACCEPTANCE = []


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", help="run long checks (n = 8 exhaustive)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="needs --extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)


BACKENDS = ["pure"] + (["compiled"] if BACKEND == "compiled" else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@pytest.fixture
def record():
    """Record one acceptance line; the summary prints them after the run."""
    def _record(criterion, ok, detail):
        ACCEPTANCE.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
        return ok
    return _record
