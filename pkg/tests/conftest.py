"""Shared pytest wiring: surface the acceptance verdict lines.

The acceptance tests record one line per criterion; printing them from the
terminal-summary hook keeps them visible even though pytest captures stdout
during the tests themselves.
"""

acceptance_lines = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
