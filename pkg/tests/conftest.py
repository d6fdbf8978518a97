import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from figures import FIG1_P, FIG2_P, FIG5_P, cmap  # noqa: E402

DATA = Path(__file__).parent / "data"

_criteria = {}


@pytest.fixture
def fig1():
    return cmap(FIG1_P, 12)


@pytest.fixture
def fig2():
    return cmap(FIG2_P, 18)


@pytest.fixture
def fig5():
    return cmap(FIG5_P, 12)


@pytest.fixture
def data_dir():
    return DATA


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        key = marker.args[0]
        prev = _criteria.get(key, "PASS")
        _criteria[key] = "PASS" if prev == "PASS" and report.outcome == "passed" else "FAIL"


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria):
        terminalreporter.write_line(f"criterion {key}: {_criteria[key]}  {_TITLES.get(key, '')}")


_TITLES = {
    1: "Fig 1 golden fixture",
    2: "Fig 2 golden fixture",
    3: "Fig 5 golden fixture",
    4: "exhaustive theorem suite (m<=3, 1000 samples at m=4)",
    5: "zigzag component counts",
    6: "knot/zigzag correspondence on random rotation graphs",
    7: "counting identities",
}
