import pytest

from hsorbits.rootsys import build_root_system, context

CRITERION_CONTEXTS = [("A", n, k) for n in range(1, 5) for k in range(1, n + 1)] + [
    ("B", 3, 1),
    ("C", 2, 2),
    ("C", 3, 3),
    ("D", 4, 1),
    ("D", 4, 3),
    ("D", 4, 4),
    ("D", 5, 1),
]

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def c2():
    return context("C", 2, 2)


@pytest.fixture(scope="session")
def c2_rs(c2):
    return c2.rs


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
