import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _criteria[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        num = int(name.split("_")[2])
        verdict = "PASS" if _criteria[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict} criterion {num:2d} ({name})")
