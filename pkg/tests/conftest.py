import numpy as np
import pytest

from fuzzyrank import make_scaling

# N = 12, heavier at both ends, with w(4) = 0.4 and w(5) = w(6) = 0.2
FIGURE1_WEIGHTS = (1.0, 0.8, 0.6, 0.4, 0.2, 0.2, 0.2, 0.2, 0.4, 0.6, 0.8)


@pytest.fixture
def figure1():
    return make_scaling(FIGURE1_WEIGHTS)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
