import pytest

_results: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or not (rep.when == "call" or rep.failed):
        return
    number, text = marker.args
    entry = _results.setdefault(number, {"text": text, "passed": 0, "failed": []})
    if rep.passed:
        entry["passed"] += 1
    else:
        entry["failed"].append(getattr(item, "callspec", None) and item.callspec.id or item.name)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        entry = _results[number]
        status = "FAIL" if entry["failed"] else "PASS"
        cases = entry["passed"] + len(entry["failed"])
        detail = f" (failed: {', '.join(entry['failed'])})" if entry["failed"] else ""
        terminalreporter.write_line(
            f"[{status}] criterion {number}: {entry['text']} [{cases} case(s)]{detail}")
