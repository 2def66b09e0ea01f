from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from bmsturm.poly import Poly

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile("default")

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def polys(draw, max_deg=8, nonzero=False):
    cs = draw(st.lists(small_rationals, min_size=1 if nonzero else 0, max_size=max_deg + 1))
    p = Poly(cs)
    if nonzero and p.is_zero():
        p = Poly((draw(st.integers(1, 9)),))
    return p


def P(*coeffs):
    """Shorthand: P(a0, a1, ...) with string or int coefficients."""
    return Poly(Fraction(c) for c in coeffs)
