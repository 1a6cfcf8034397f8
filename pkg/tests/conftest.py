from fractions import Fraction

from hypothesis import strategies as st

from umbra.algebra import Polynomial
from umbra.series import PowerSeries

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
small_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def polynomials(max_degree=10, coeffs=rationals):
    return st.lists(coeffs, max_size=max_degree + 1).map(Polynomial)


def series(trunc=12, coeffs=rationals):
    return st.lists(coeffs, min_size=trunc + 1, max_size=trunc + 1).map(PowerSeries)


@st.composite
def delta_series(draw, trunc=12):
    lead = draw(rationals.filter(bool))
    rest = draw(st.lists(small_rationals, min_size=trunc - 1, max_size=trunc - 1))
    return PowerSeries([0, lead] + rest)


@st.composite
def invertible_series(draw, trunc=12):
    c0 = draw(rationals.filter(bool))
    rest = draw(st.lists(small_rationals, min_size=trunc, max_size=trunc))
    return PowerSeries([c0] + rest)


def F(a, b=1):
    return Fraction(a, b)


# acceptance criteria print one line each at the end of the session
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
