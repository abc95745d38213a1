import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).resolve().parent))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, text): acceptance criterion")
    config._criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    cid, text = mark.args
    table = item.config._criteria
    prev = table.get(cid, (text, "PASS"))[1]
    if rep.failed:
        table[cid] = (text, "FAIL")
    elif rep.when == "call" and rep.skipped:
        table[cid] = (text, "SKIP")
    else:
        table.setdefault(cid, (text, prev))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    table = getattr(config, "_criteria", {})
    if not table:
        return
    terminalreporter.section("acceptance criteria")

    def key(c):
        num = "".join(ch for ch in c if ch.isdigit())
        return int(num), c

    for cid in sorted(table, key=key):
        text, status = table[cid]
        terminalreporter.write_line(f"criterion {cid:<3} {status}  {text}")
