import random

import pytest

from rskes import kernels
from rskes.code import CodeParams
from rskes.gf import field


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    with kernels.using(request.param):
        yield request.param


@pytest.fixture
def gf8():
    return field(3, 0xB)


@pytest.fixture
def rs15():
    return CodeParams.make(4, 15, 2, 0, 0x13)


@pytest.fixture
def rs7():
    return CodeParams.make(3, 7, 2, 0, 0xB)


@pytest.fixture
def rng():
    return random.Random(20240611)


_CRITERIA_KEY = pytest.StashKey[dict]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config.stash[_CRITERIA_KEY] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when not in ("setup", "call"):
        return
    if rep.when == "setup" and rep.passed:
        return
    number, title = marker.args
    results = item.config.stash[_CRITERIA_KEY]
    prev = results.get(number, (title, True))
    results[number] = (title, prev[1] and rep.passed)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_CRITERIA_KEY, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, ok = results[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}")
