from __future__ import annotations

import pytest

_OUTCOMES: dict[int, tuple[str, str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not (report.when == "setup" and report.failed):
        return
    number, label = marker.args
    verdict = "PASS" if report.passed else "FAIL"
    detail = ""
    if report.failed and call.excinfo is not None:
        detail = str(call.excinfo.value).splitlines()[0][:160]
    _OUTCOMES[number] = (verdict, label, detail)


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_OUTCOMES):
        verdict, label, detail = _OUTCOMES[number]
        line = f"criterion {number:2d}: {verdict}  {label}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
