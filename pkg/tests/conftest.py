import numpy as np
import pytest


@pytest.fixture
def log_grid():
    def make(lo, hi, count):
        return [float(v) for v in np.geomspace(lo, hi, count)]

    return make


_ACCEPTANCE = {}


def pytest_runtest_makereport(item, call):
    if call.when != "call" or not item.module.__name__.endswith("test_acceptance"):
        return
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    _ACCEPTANCE[item.name] = (doc, call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for doc, ok in _ACCEPTANCE.values():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {doc}")
