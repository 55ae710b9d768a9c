"""Shared pytest wiring for the test suite.

The acceptance tests register a one-line verdict per numbered criterion;
this hook prints those lines in the terminal summary so the gate is
readable even when individual test output is captured.
"""

from __future__ import annotations

import pytest

_ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def acceptance_registry() -> dict[int, str]:
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(_ACCEPTANCE_LINES[number])
