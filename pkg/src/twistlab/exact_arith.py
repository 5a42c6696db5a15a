"""Exact arithmetic on the circle R/Z restricted to the subgroup Q + Z*theta.

The circle is written additively.  An :class:`Angle` ``(q, m)`` stands for
``q + m*theta mod 1`` where ``theta = (sqrt(5) - 1)/2`` is the golden-ratio
conjugate.  Because ``theta`` is irrational, two angles are equal in R/Z exactly
when both components agree, so every identity can be checked with ``==``.

Order questions (is an angle inside an arc?) are decided exactly in
``Q(sqrt 5)`` by sign tests; floating point only appears in
:func:`angle_to_float`, which is used for sampling and display.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

import mpmath

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_rational(value: RationalLike) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def _sign_quadratic(a: Fraction, b: Fraction) -> int:
    """Sign of ``a + b*sqrt(5)`` for rationals a, b."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return 1 if b > 0 else -1
    if (a > 0) == (b > 0):
        return 1 if a > 0 else -1
    # opposite signs: compare a^2 with 5 b^2 (never equal, sqrt 5 is irrational)
    if a * a > 5 * b * b:
        return 1 if a > 0 else -1
    return 1 if b > 0 else -1


def _floor_quadratic(a: Fraction, b: Fraction) -> int:
    """Exact floor of ``a + b*sqrt(5)``."""
    if b == 0:
        return a.numerator // a.denominator
    num, den = b.numerator, b.denominator
    approx = isqrt(5 * num * num) // den
    n = (a.numerator // a.denominator) + (approx if num > 0 else -approx - 1)
    while _sign_quadratic(a - n, b) < 0:
        n -= 1
    while _sign_quadratic(a - (n + 1), b) >= 0:
        n += 1
    return n


class Angle:
    """The circle element ``q + m*theta mod 1`` with ``0 <= q < 1``.

    Only ``q`` is reduced mod 1; ``m`` is kept as is, which is what makes
    equality exact.
    """

    __slots__ = ("q", "m")

    def __init__(self, q: RationalLike = 0, m: int = 0):
        q = as_rational(q)
        n, d = q.numerator, q.denominator
        if n < 0 or n >= d:
            q = Fraction(n % d, d)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "m", int(m))

    @classmethod
    def _trusted(cls, q: Fraction, m: int) -> Angle:
        """Skip normalization; ``q`` must already be a Fraction in [0, 1)."""
        a = object.__new__(cls)
        object.__setattr__(a, "q", q)
        object.__setattr__(a, "m", m)
        return a

    def __setattr__(self, name, value):
        raise AttributeError("Angle is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Angle):
            return NotImplemented
        return self.m == other.m and self.q == other.q

    def __hash__(self) -> int:
        return hash((self.q, self.m))

    def __repr__(self) -> str:
        return f"Angle({self.q!s}, {self.m})"

    def __str__(self) -> str:
        return render_angle(self)

    def __add__(self, other: Angle) -> Angle:
        return angle_add(self, other)

    def __sub__(self, other: Angle) -> Angle:
        return angle_add(self, angle_neg(other))

    def __neg__(self) -> Angle:
        return angle_neg(self)

    def __mul__(self, k: int) -> Angle:
        return Angle(self.q * k, self.m * k)

    __rmul__ = __mul__

    def __reduce__(self):
        return (Angle, (self.q, self.m))

    @property
    def is_zero(self) -> bool:
        return self.m == 0 and self.q == 0

    @property
    def is_rational(self) -> bool:
        return self.m == 0

    def _quadratic(self) -> tuple[Fraction, Fraction]:
        # q + m*(sqrt5 - 1)/2  ==  (q - m/2) + (m/2)*sqrt5
        half = Fraction(self.m, 2)
        return self.q - half, half

    def representative(self) -> tuple[Fraction, Fraction]:
        """``(a, b)`` with ``a + b*sqrt(5)`` the representative of this angle in [0, 1)."""
        a, b = self._quadratic()
        return a - _floor_quadratic(a, b), b

    def compare(self, r: RationalLike) -> int:
        """Compare the [0, 1) representative of this angle with a rational ``r``."""
        a, b = self.representative()
        return _sign_quadratic(a - as_rational(r), b)

    def in_arc(self, lo: RationalLike, hi: RationalLike) -> bool:
        """Whether the angle lies on the half-open arc from ``lo`` to ``hi``.

        ``lo`` and ``hi`` are read mod 1; if ``hi`` does not exceed ``lo`` after
        reduction the arc wraps through 0.  An arc of length >= 1 is the whole circle.
        """
        lo, hi = as_rational(lo), as_rational(hi)
        if hi - lo >= 1:
            return True
        lo_r = lo - (lo.numerator // lo.denominator)
        hi_r = lo_r + (hi - lo)
        if self.m == 0:
            q = self.q
            if hi_r <= 1:
                return lo_r <= q < hi_r
            return q >= lo_r or q < hi_r - 1
        if hi_r <= 1:
            return self.compare(lo_r) >= 0 and self.compare(hi_r) < 0
        return self.compare(lo_r) >= 0 or self.compare(hi_r - 1) < 0


ZERO_ANGLE = Angle(0, 0)
THETA = Angle(0, 1)


def angle_add(a: Angle, b: Angle) -> Angle:
    return Angle(a.q + b.q, a.m + b.m)


def angle_neg(a: Angle) -> Angle:
    return Angle(_ONE - a.q if a.q else _ZERO, -a.m)


def angle_sum(angles) -> Angle:
    total_q = _ZERO
    total_m = 0
    for a in angles:
        total_q += a.q
        total_m += a.m
    return Angle(total_q, total_m)


def angle_to_float(a: Angle, precision_bits: int = 128) -> mpmath.mpf:
    """Value of ``a`` in [0, 1) as an mpmath float carrying ``precision_bits`` bits."""
    if precision_bits < 64:
        raise ValueError("precision_bits must be at least 64")
    base, coeff = a.representative()
    with mpmath.workprec(precision_bits + 16):
        value = mpmath.mpf(base.numerator) / base.denominator
        if coeff:
            value += mpmath.mpf(coeff.numerator) / coeff.denominator * mpmath.sqrt(5)
    with mpmath.workprec(precision_bits):
        return +value


@dataclass(frozen=True, slots=True)
class BasePoint:
    """A point ``(x, y)`` of the torus X = T^2; ``y`` stays rational."""

    x: Angle
    y: Fraction

    def __post_init__(self):
        y = as_rational(self.y)
        n, d = y.numerator, y.denominator
        if n < 0 or n >= d:
            y = Fraction(n % d, d)
        object.__setattr__(self, "y", y)

    def __str__(self) -> str:
        return f"({render_angle(self.x)}; {render_rational(self.y)})"


def base_point(x: Angle | RationalLike, y: RationalLike) -> BasePoint:
    return BasePoint(x if isinstance(x, Angle) else Angle(x), as_rational(y))


def rotate_x(p: BasePoint, times: int = 1) -> BasePoint:
    """Irrational rotation by ``times * theta`` in the first coordinate."""
    moved = object.__new__(BasePoint)
    object.__setattr__(moved, "x", Angle._trusted(p.x.q, p.x.m + times))
    object.__setattr__(moved, "y", p.y)
    return moved


def rotate_x_inverse(p: BasePoint) -> BasePoint:
    return rotate_x(p, -1)


def render_rational(r: Fraction) -> str:
    return str(r)


def render_angle(a: Angle) -> str:
    if a.m == 0:
        return str(a.q)
    sign = "+" if a.m > 0 else "-"
    return f"{a.q} {sign} {abs(a.m)}*theta"
