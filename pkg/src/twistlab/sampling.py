"""Seeded random generators for exact test data.

All randomness goes through ``random.Random`` (Mersenne Twister), whose output
for integer seeds and the ``randrange``/``choice`` calls used here is stable
across platforms and Python releases.  Reports are reproducible from
``(suite, seed, samples)`` alone.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .exact_arith import Angle, BasePoint

DENOMINATORS = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 24, 32, 60, 64, 97, 1024)
MAX_THETA_MULTIPLE = 5


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_rational(rng: random.Random) -> Fraction:
    den = rng.choice(DENOMINATORS)
    return Fraction(rng.randrange(den), den)


def random_angle(rng: random.Random, *, rational: bool = False) -> Angle:
    m = 0 if rational else rng.randint(-MAX_THETA_MULTIPLE, MAX_THETA_MULTIPLE)
    return Angle(random_rational(rng), m)


def random_base_point(rng: random.Random) -> BasePoint:
    return BasePoint(random_angle(rng), random_rational(rng))
