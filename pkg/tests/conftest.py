import pathlib

import pytest

from adaptcc import backend

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture(params=backend.available())
def kernels(request):
    """Every available kernel backend."""
    return backend.get(request.param)


@pytest.fixture
def data_dir():
    return DATA


# -- acceptance reporting ---------------------------------------------------

_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _acceptance.append((marker.args[0], marker.args[1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_acceptance):
        verdict = {"passed": "PASS", "failed": "FAIL"}.get(outcome, outcome.upper())
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title}")
