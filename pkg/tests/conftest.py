import random

import pytest
from hypothesis import strategies as st

from wmge.pathpair import PathPair


@st.composite
def path_pairs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    px = draw(st.permutations(range(n)))
    py = draw(st.permutations(range(n)))
    return PathPair(tuple(px), tuple(py))


def random_pair(rng: random.Random, n: int, fix_x: bool = False) -> PathPair:
    px = list(range(n))
    py = list(range(n))
    if not fix_x:
        rng.shuffle(px)
    rng.shuffle(py)
    return PathPair(tuple(px), tuple(py))


@pytest.fixture
def tri():
    return PathPair((0, 1, 2), (0, 2, 1))


@pytest.fixture
def rng():
    return random.Random(20251016)


# acceptance criteria report one line each, printed after the test session
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
