import pytest

from polysieve import DEFAULT_CONSTANTS, parse_polynomial


@pytest.fixture
def consts():
    return DEFAULT_CONSTANTS


@pytest.fixture
def cubic():
    return parse_polynomial("x^3+2")


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
