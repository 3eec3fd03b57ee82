import pytest

from ferrers.core import Diagram


def box_diagrams(rows, cols):
    """Every partition fitting in a rows x cols box."""
    def rec(k, cap):
        if k == 0:
            yield ()
            return
        for first in range(cap, -1, -1):
            for rest in rec(k - 1, first):
                yield (first,) + rest

    return sorted({Diagram(r) for r in rec(rows, cols)})


@pytest.fixture(scope="session")
def box6():
    return box_diagrams(6, 6)


def pytest_terminal_summary(terminalreporter):
    from acceptance_report import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
