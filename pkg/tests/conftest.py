import pytest
from hypothesis import settings, strategies as st

from qsteiner.gf import build_tower

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def F4():
    """F_4 = F_2[y]/(y^2 + y + 1) as an ambient over F_2."""
    return build_tower(2, 1, 2)


@pytest.fixture(scope="session")
def tower():
    return build_tower


def elems(T, nonzero=False):
    s = st.tuples(*[st.integers(0, T.q - 1)] * T.M).map(T.elem)
    return s.filter(bool) if nonzero else s


def scalars(T, nonzero=False):
    return st.integers(1 if nonzero else 0, T.q - 1)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
