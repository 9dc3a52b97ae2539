import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=50, deadline=None)
settings.load_profile("default")

# criterion number -> [title, all tests passed so far]
_criteria: dict[int, list] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (rep.when != "call" and not rep.failed):
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, [title, True])
    if not rep.passed:
        entry[1] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
    terminalreporter.write_line(
        f"witness cubic degree assertion: {_monitor['fired']} firings in {_monitor['calls']} calls"
    )


_monitor = {"calls": 0, "fired": 0}


@pytest.fixture(scope="session", autouse=True)
def witness_cubic_monitor():
    """Counts witness-cubic constructions, and degree-assertion firings, suite-wide."""
    from scf import classification

    real = classification.witness_cubic

    def watched(k, k2):
        _monitor["calls"] += 1
        try:
            return real(k, k2)
        except AssertionError:
            _monitor["fired"] += 1
            raise

    mp = pytest.MonkeyPatch()
    mp.setattr(classification, "witness_cubic", watched)
    yield _monitor
    mp.undo()

