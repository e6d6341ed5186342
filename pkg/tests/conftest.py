import os
import sys

sys.path.insert(0, os.path.dirname(__file__))


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call":
        _acceptance.extend(v for k, v in report.user_properties if k == "acceptance")


def pytest_terminal_summary(terminalreporter):
    if _acceptance:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
