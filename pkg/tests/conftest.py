from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

from xbannaito import BIParams, Poly, RatFunc

PARAM_SETS = [
    BIParams(Fraction(1, 3), Fraction(1, 5), Fraction(1, 7), Fraction(1, 11)),
    BIParams(Fraction(2, 7), Fraction(3, 13), Fraction(5, 17), Fraction(1, 19)),
    BIParams(Fraction(-3, 8), Fraction(4, 9), Fraction(7, 23), Fraction(-2, 29)),
]

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=12)


@st.composite
def polys(draw, max_degree=4):
    return Poly(draw(st.lists(small_q, max_size=max_degree + 1)))


@st.composite
def nonzero_polys(draw, max_degree=3):
    p = draw(polys(max_degree))
    return p if p else Poly.const(draw(small_q.filter(bool)))


@st.composite
def ratfuncs(draw):
    return RatFunc(draw(polys(3)), draw(nonzero_polys(2)))


@pytest.fixture
def P():
    return PARAM_SETS[0]


@pytest.fixture(params=range(len(PARAM_SETS)), ids=["p0", "p1", "p2"])
def params(request):
    return PARAM_SETS[request.param]


# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
