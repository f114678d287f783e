from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from calpanic import CalpanicNumber, Coefficient

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def rationals(max_num=9, max_den=4, nonzero=True):
    nums = st.integers(-max_num, max_num)
    if nonzero:
        nums = nums.filter(bool)
    return st.builds(Fraction, nums, st.integers(1, max_den))


def coefficients(complex_=False):
    if not complex_:
        return rationals().map(Coefficient)
    return st.builds(Coefficient, rationals(nonzero=False), rationals(nonzero=False)).filter(bool)


def numbers(min_order=-4, max_order=3, max_terms=5, complex_=False):
    return st.dictionaries(
        st.integers(min_order, max_order), coefficients(complex_), min_size=1, max_size=max_terms
    ).map(CalpanicNumber)


@pytest.fixture
def ev():
    from calpanic import evaluate_text

    return evaluate_text


# acceptance criteria results, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
