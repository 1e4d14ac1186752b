import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

# criterion number -> (label, passed, detail)
_CRITERIA: dict[int, list] = {}


@pytest.fixture
def detail(request):
    """Free-form note shown next to the criterion's summary line."""
    notes: list[str] = []
    request.node._criterion_notes = notes
    return notes.append


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    k, label = mark.args
    entry = _CRITERIA.setdefault(k, [label, True, []])
    if rep.failed:
        entry[1] = False
        entry[2].append(f"{item.name} failed")
    elif rep.when == "call":
        entry[2].extend(getattr(item, "_criterion_notes", []))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        label, ok, notes = _CRITERIA[k]
        extra = f"  ({'; '.join(notes)})" if notes else ""
        terminalreporter.write_line(f"criterion {k} {label:<22} {'PASS' if ok else 'FAIL'}{extra}")
