import os
import random

import pytest
from hypothesis import HealthCheck, settings

from corank.rings import GF, QQ, ZZ

settings.register_profile("ci", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))

RINGS = [ZZ, QQ, GF(2), GF(5)]


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(params=RINGS, ids=repr)
def ring(request):
    return request.param


# -- acceptance reporting ------------------------------------------------------

_OUTCOMES: dict = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (report.when != "call" and not report.failed):
        return
    number = mark.args[0]
    part = mark.kwargs.get("part") or item.name
    ok = report.passed if report.when == "call" else False
    parts = _OUTCOMES.setdefault(number, {})
    parts[part] = parts.get(part, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_OUTCOMES):
        parts = _OUTCOMES[number]
        failed = [p for p, ok in parts.items() if not ok]
        status = "FAIL" if failed else "PASS"
        detail = f" (failing: {', '.join(failed)})" if failed else ""
        terminalreporter.write_line(f"criterion {number}: {status}{detail}")
