"""Hypothesis strategies shared by the property tests."""
from hypothesis import strategies as st

from septic_qseries.ring import CycElement, euler_phi
from septic_qseries.series import QSeries

LEVELS = (3, 4, 7, 12, 28)

small_fraction = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def cyc_elements(draw, level=None, nonzero=False):
    m = draw(st.sampled_from(LEVELS)) if level is None else level
    coords = draw(st.lists(small_fraction, min_size=euler_phi(m), max_size=euler_phi(m)))
    a = CycElement(m, coords)
    if nonzero and a.is_zero():
        a = a + 1
    return a


@st.composite
def series(draw, level=1, denom=None, lo=None, unit=False, length=None):
    """A random truncated series; ``unit`` forces a nonzero leading coefficient."""
    D = draw(st.sampled_from((1, 2, 3))) if denom is None else denom
    start = draw(st.integers(-3, 3)) if lo is None else lo
    n = draw(st.integers(1, 12)) if length is None else length
    if level == 1:
        coeffs = draw(st.lists(st.integers(-6, 6), min_size=n, max_size=n))
        if unit and coeffs[0] == 0:
            coeffs[0] = 1
    else:
        coeffs = draw(st.lists(cyc_elements(level), min_size=n, max_size=n))
        if unit and coeffs[0].is_zero():
            coeffs[0] = coeffs[0] + 1
    return QSeries.from_coeffs(coeffs, lo=start, prec=start + n, denom=D, level=level)


@st.composite
def one_series(draw, level=1, denom=None):
    """Series with constant term exactly 1, as rational powers require."""
    D = draw(st.sampled_from((1, 2))) if denom is None else denom
    n = draw(st.integers(1, 10))
    tail = draw(st.lists(st.integers(-4, 4), min_size=n - 1, max_size=n - 1))
    return QSeries.from_coeffs([1] + tail, prec=n, denom=D, level=level)
