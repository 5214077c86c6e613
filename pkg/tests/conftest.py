import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def random_points(seed, n, lo=0.0, hi=1.0):
    rng = random.Random(seed)
    pts = set()
    while len(pts) < n:
        pts.add((rng.uniform(lo, hi), rng.uniform(lo, hi)))
    return sorted(pts, key=lambda p: rng.random())


@pytest.fixture
def pts40():
    return random_points(11, 40)


# ---------------------------------------------------------------- acceptance summary

_CRITERIA: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    entry = _CRITERIA.setdefault(num, {"title": title, "ok": True, "notes": []})
    if rep.failed or (rep.when == "call" and rep.skipped):
        entry["ok"] = False
    if rep.when == "call":
        entry["notes"] += [v for k, v in item.user_properties if k == "note"]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        e = _CRITERIA[num]
        line = f"criterion {num:2d} {e['title']}: {'PASS' if e['ok'] else 'FAIL'}"
        if e["notes"]:
            line += "  (" + "; ".join(e["notes"]) + ")"
        tr.write_line(line)


@pytest.fixture
def note(record_property):
    def add(text):
        record_property("note", text)

    return add
