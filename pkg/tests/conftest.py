import pytest

from hilbert_lattice.builders import corpus


@pytest.fixture(scope="session")
def lattices():
    return corpus()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_results", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
