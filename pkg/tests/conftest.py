from __future__ import annotations

from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from twistlab.exact_arith import Angle, BasePoint
from twistlab.freegroup import LETTERS, reduce

settings.register_profile("default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

unit_fractions = st.builds(
    lambda n, d: Fraction(n % d, d),
    st.integers(min_value=0, max_value=10**6),
    st.integers(min_value=1, max_value=2000),
)
any_fractions = st.fractions(min_value=-50, max_value=50, max_denominator=500)
rational_angles = st.builds(Angle, unit_fractions)
angles = st.builds(Angle, unit_fractions, st.integers(min_value=-12, max_value=12))
base_points = st.builds(BasePoint, angles, unit_fractions)
raw_letters = st.lists(st.sampled_from(LETTERS), max_size=10)
words = raw_letters.map(reduce)
short_words = st.lists(st.sampled_from(LETTERS), max_size=4).map(reduce)
