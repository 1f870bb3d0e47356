import pytest

from markov_farey import farey as fy

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def tree12():
    return fy.enumerate_triples(12)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
