import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gf2diff.field import make_binary_field, make_field  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def gf16():
    return make_binary_field(4)


@pytest.fixture(scope="session", params=[1, 2, 3], ids=lambda n: f"n={n}")
def quartic_field(request):
    return make_field(request.param)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = "PASS" if report.passed else "FAIL"
        ACCEPTANCE_LINES.append(f"criterion {number:>2} {status}  {title} ({report.duration:.2f} s)")
