import pytest

from hopi.lattice import build_hopi

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def hd():
    return build_hopi


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
