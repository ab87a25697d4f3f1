"""Shared pytest wiring: the acceptance criteria report.

test_acceptance.py appends one PASS/FAIL line per criterion; they are
replayed in a dedicated section after the test summary so a plain
``pytest -v`` run shows them without -s.
"""

acceptance_lines: list = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
