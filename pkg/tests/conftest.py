from __future__ import annotations

import json
from pathlib import Path

import pytest
from hypothesis import settings

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile("default", deadline=None)
settings.load_profile("default")

_criteria: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(cid, title): acceptance criterion checked by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    cid, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[rep.outcome]
        previous = _criteria.get(cid, (title, "PASS"))[1]
        # a criterion split over several tests passes only if all of them do
        if previous == "FAIL" or (previous == "SKIP" and status == "PASS"):
            status = previous
        _criteria[cid] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_criteria, key=lambda c: int(c.lstrip("C"))):
        title, status = _criteria[cid]
        terminalreporter.write_line(f"{cid:<4} {status:<5} {title}")


@pytest.fixture(scope="session")
def reference_tables():
    return json.loads((FIXTURES / "reference_tables.json").read_text())


@pytest.fixture
def conformance_path():
    return FIXTURES / "conformance.nt"
