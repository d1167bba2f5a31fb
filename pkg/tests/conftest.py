import itertools

import pytest
from hypothesis import strategies as st

from kvdp.digraph import Digraph

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def digraphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    flags = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph(n, [e for e, f in zip(pairs, flags) if f])


@st.composite
def tournaments(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    flags = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph(n, [(u, v) if f else (v, u) for (u, v), f in zip(pairs, flags)])


def all_tournaments(n):
    pairs = list(itertools.combinations(range(n), 2))
    for flags in itertools.product((False, True), repeat=len(pairs)):
        yield Digraph(n, [(u, v) if f else (v, u) for (u, v), f in zip(pairs, flags)])


@pytest.fixture
def cycle3():
    # a=0, b=1, c=2
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])
