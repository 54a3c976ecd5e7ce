import random

import pytest
from hypothesis import strategies as st

from salemtrace.poly import IntPolynomial


def polys(max_degree=30, bound=50, nonzero=False):
    """Hypothesis strategy for dense integer polynomials."""
    coeffs = st.lists(st.integers(-bound, bound), min_size=1, max_size=max_degree + 1)
    out = coeffs.map(IntPolynomial)
    if nonzero:
        out = out.filter(lambda p: not p.is_zero())
    return out


@pytest.fixture
def rng():
    return random.Random(20240611)


ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE):
        terminalreporter.write_line(line[1])
