import pytest

from pindot import PointSet, make_field

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def gf3():
    return make_field(3)


@pytest.fixture
def gf4():
    return make_field(2, 2)


@pytest.fixture
def square(gf3):
    """The running example {(0,0), (1,0), (0,1), (1,1)} in GF(3)^2."""
    return PointSet(gf3, [(0, 0), (1, 0), (0, 1), (1, 1)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
