import pytest

from hamsq import smallgraphs as sg

ACCEPTANCE_LINES = []


def record_acceptance(line):
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def c5():
    return sg.cycle_graph(5)


@pytest.fixture(scope="session")
def k4():
    return sg.complete_graph(4)


@pytest.fixture(scope="session")
def two_connected_6():
    return sg.two_connected_graphs(6)


@pytest.fixture(scope="session")
def spider():
    """Full subdivision of the claw: the classic non-hamiltonian square."""
    from hamsq.corpus import full_subdivision

    claw = sg.from_nx(__import__("networkx").star_graph(3))
    return full_subdivision(claw)
