"""Orbit sampling for the rotation alpha_a on the first torus coordinate.

Minimality of an irrational rotation is a theorem, not a computation; what
is measured here is the largest gap left by the first N orbit points, which
for a minimal rotation must shrink to zero.  Orbit points are computed in
128-bit fixed point with Python integers, so N = 10^5 costs well under a
second and accumulated rounding stays below N * 2^-128.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional

from ..exact_arith import Angle

FIXED_BITS = 128
_SCALE = 1 << FIXED_BITS
GAP_CONSTANT = 10


def _theta_fixed() -> int:
    # floor(2^128 * (sqrt 5 - 1)/2)
    return (isqrt(5 * _SCALE * _SCALE) - _SCALE) // 2


def _fixed(value: Fraction) -> int:
    return (value.numerator * _SCALE) // value.denominator


@dataclass(frozen=True)
class MinimalityReport:
    iterations: int
    max_gap: float
    bound: float
    rotation: str

    @property
    def passed(self) -> bool:
        return self.max_gap < self.bound


def orbit_gaps(iterations: int, start: Angle = Angle(0), rotation: Optional[Fraction] = None) -> list[int]:
    """Circular gaps (in units of 2^-128) between the first ``iterations`` orbit points."""
    step = _theta_fixed() if rotation is None else _fixed(Fraction(rotation) % 1)
    x0 = _fixed(start.q) + start.m * _theta_fixed()
    points = sorted({(x0 + k * step) % _SCALE for k in range(iterations)})
    gaps = [b - a for a, b in zip(points, points[1:])]
    gaps.append(points[0] + _SCALE - points[-1])
    return gaps


def minimality_report(iterations: int, start: Angle = Angle(0), rotation: Optional[Fraction] = None) -> MinimalityReport:
    """Largest orbit gap of x0 + k*theta (or x0 + k*rotation), checked against 10/N."""
    if iterations < 100:
        raise ValueError("need at least 100 iterations")
    gap = max(orbit_gaps(iterations, start, rotation)) / _SCALE
    return MinimalityReport(
        iterations=iterations,
        max_gap=gap,
        bound=GAP_CONSTANT / iterations,
        rotation="theta" if rotation is None else str(Fraction(rotation)),
    )


def distinct_gap_lengths(iterations: int, start: Angle = Angle(0)) -> set[int]:
    """The set of gap lengths; at most three for any rotation."""
    return set(orbit_gaps(iterations, start))
