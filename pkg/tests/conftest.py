import os

import pytest
from hypothesis import HealthCheck, settings

from gorenstein import catalog

settings.register_profile(
    "default", deadline=None, max_examples=int(os.environ.get("HYPOTHESIS_EXAMPLES", "60")),
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def small_polytopes():
    return catalog.small_polytopes()


@pytest.fixture(scope="session")
def tetra_pair():
    return catalog.cayley_tetra_pair_7d()


@pytest.fixture(scope="session")
def diamond_pair():
    return catalog.diamond_pair_halflattice()


_CRITERIA: dict[int, tuple[str, bool]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    num, title = mark.args
    prev = _CRITERIA.get(num, (title, True))[1]
    _CRITERIA[num] = (title, prev and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        title, ok = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {title}")
