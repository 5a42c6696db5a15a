"""Principal circle bundles over the torus given by integer clutching data.

``L_n`` is glued from the trivial bundle over ``[0, 1] x T`` by identifying
``(1, y, t)`` with ``(0, y, t + n*y)``.  A point is stored in canonical
coordinates: its phase relative to the set-theoretic section
``s(x, y) = (x, y, 0)`` over the fundamental domain ``x in [0, 1)``.  This
section is discontinuous at the seam ``x = 0`` unless ``n = 0``.

All algebra (action, pairing, conjugation) is exact in these coordinates.
Topology is handled through the two-chart cover below: chart sections are
continuous, and the degree of the seam transition in ``y`` is the Chern
number, which :func:`winding_number` recovers from samples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Sequence

import mpmath

from .errors import BaseMismatch, NotInChart, NotInOverlap, SamplingTooCoarse
from .exact_arith import (
    ZERO_ANGLE,
    Angle,
    BasePoint,
    angle_add,
    angle_neg,
    angle_to_float,
    render_angle,
)

DEFAULT_WINDING_SAMPLES = 1024
_QUARTER = Fraction(1, 4)
_HALF = Fraction(1, 2)


@dataclass(frozen=True, slots=True)
class ClutchBundle:
    chern: int

    @property
    def is_trivial_presentation(self) -> bool:
        return self.chern == 0

    def conjugate(self) -> ClutchBundle:
        return ClutchBundle(-self.chern)

    def __str__(self) -> str:
        return f"L{self.chern}"


TRIVIAL = ClutchBundle(0)
NONTRIVIAL = ClutchBundle(1)


@dataclass(frozen=True, slots=True)
class FiberPoint:
    bundle: ClutchBundle
    base: BasePoint
    phase: Angle

    def __str__(self) -> str:
        return f"L{self.bundle.chern}@({render_angle(self.base.x)}; {self.base.y}; {render_angle(self.phase)})"


def project(b: FiberPoint) -> BasePoint:
    return b.base


def t_act(z: Angle, b: FiberPoint) -> FiberPoint:
    return FiberPoint(b.bundle, b.base, angle_add(z, b.phase))


def pairing(b1: FiberPoint, b2: FiberPoint) -> Angle:
    """The unique ``z`` with ``t_act(z, b2) == b1``."""
    if b1.bundle != b2.bundle:
        raise BaseMismatch(f"points lie in different bundles {b1.bundle} and {b2.bundle}")
    if b1.base != b2.base:
        raise BaseMismatch(f"points lie over different bases {b1.base} and {b2.base}")
    return angle_add(b1.phase, angle_neg(b2.phase))


def conjugate(b: FiberPoint) -> FiberPoint:
    """The copy of ``b`` in the conjugate bundle, stored with the additive action.

    ``z . conj(b) = conj(-z . b)``, so the stored phase is the negated phase.
    """
    return FiberPoint(b.bundle.conjugate(), b.base, angle_neg(b.phase))


@lru_cache(maxsize=1 << 14)
def _in_arc(x: Angle, lo: Fraction, hi: Fraction) -> bool:
    # winding loops revisit the same x for every sampled y
    return x.in_arc(lo, hi)


@dataclass(frozen=True, slots=True)
class Chart:
    index: int
    lo: Fraction
    hi: Fraction

    def contains(self, p: BasePoint) -> bool:
        return _in_arc(p.x, self.lo, self.hi)

    def __str__(self) -> str:
        return f"chart{self.index}[{self.lo}, {self.hi})"


OVERLAP_WIDTH = Fraction(1, 8)
CHART_0 = Chart(0, Fraction(0), _HALF + OVERLAP_WIDTH)
CHART_1 = Chart(1, _HALF, 1 + OVERLAP_WIDTH)
CHARTS = (CHART_0, CHART_1)


def on_seam_strip(p: BasePoint) -> bool:
    return _in_arc(p.x, Fraction(0), OVERLAP_WIDTH)


@dataclass(frozen=True, slots=True)
class TransitionValue:
    angle: Angle

    def __post_init__(self):
        if not self.angle.is_rational:
            raise ValueError("transition values are purely rational")


def transition(bundle: ClutchBundle, chart_from: Chart, chart_to: Chart, p: BasePoint) -> TransitionValue:
    """Phase carrying the ``chart_from`` section to the ``chart_to`` section at ``p``.

    ``local_section(chart_to)(p) == t_act(value, local_section(chart_from)(p))``.
    """
    if not (chart_from.contains(p) and chart_to.contains(p)):
        raise NotInOverlap(f"{p} is not in the overlap of {chart_from} and {chart_to}")
    if chart_from == chart_to or not on_seam_strip(p):
        return TransitionValue(ZERO_ANGLE)
    value = Angle(bundle.chern * p.y)
    if chart_from.index == 1:
        value = angle_neg(value)
    return TransitionValue(value)


def transition_column(
    bundle: ClutchBundle, chart_from: Chart, chart_to: Chart, x: Angle, ys: Sequence[Fraction]
) -> list[Angle]:
    """``transition`` at every ``(x, y)`` for ``y`` in ``ys``.

    Charts are vertical strips, so overlap membership is decided once for ``x``.
    """
    p0 = BasePoint(x, Fraction(0))
    if not (chart_from.contains(p0) and chart_to.contains(p0)):
        raise NotInOverlap(f"x = {render_angle(x)} is not in the overlap of {chart_from} and {chart_to}")
    if chart_from == chart_to or not on_seam_strip(p0):
        return [ZERO_ANGLE] * len(ys)
    n = -bundle.chern if chart_from.index == 1 else bundle.chern
    return [Angle(n * y) for y in ys]


def local_section(bundle: ClutchBundle, chart: Chart) -> Callable[[BasePoint], FiberPoint]:
    """Continuous section over ``chart``.

    Chart 0 avoids the seam and uses the canonical section.  Chart 1 straddles
    the seam, so past it the phase is shifted by the clutching value ``n*y``.
    """

    def section(p: BasePoint) -> FiberPoint:
        if not chart.contains(p):
            raise NotInChart(f"{p} is outside {chart}")
        if chart.index == 1 and on_seam_strip(p):
            return FiberPoint(bundle, p, Angle(bundle.chern * p.y))
        return FiberPoint(bundle, p, ZERO_ANGLE)

    return section


def _centered(delta: Angle):
    """Representative of ``delta`` in [-1/2, 1/2); exact when rational."""
    if delta.m == 0:
        q = delta.q
        return q - 1 if q >= _HALF else q
    v = angle_to_float(delta, 128)
    return v - 1 if v >= 0.5 else v


def winding_number(loop_samples: Sequence[Angle]) -> int:
    """Degree of a sampled closed loop in the circle.

    The loop is closed implicitly (last sample back to the first).  Each step
    is lifted to its representative in [-1/2, 1/2), which is the true step
    only when steps are short; steps of 1/4 or more are rejected.
    """
    n = len(loop_samples)
    if n == 0:
        return 0
    exact_total = Fraction(0)
    float_total = mpmath.mpf(0)
    for k in range(n):
        step = _centered(angle_add(loop_samples[(k + 1) % n], angle_neg(loop_samples[k])))
        if isinstance(step, Fraction):
            if abs(step) >= _QUARTER:
                raise SamplingTooCoarse(k, step)
            exact_total += step
        else:
            if abs(step) >= mpmath.mpf(0.25):
                raise SamplingTooCoarse(k, step)
            float_total += step
    if float_total == 0:
        if exact_total.denominator != 1:
            raise ArithmeticError(f"lifted loop does not close: {exact_total}")
        return int(exact_total)
    total = float_total + exact_total.numerator / mpmath.mpf(exact_total.denominator)
    result = int(mpmath.nint(total))
    if abs(total - result) > mpmath.mpf(2) ** -60:
        raise ArithmeticError(f"lifted loop does not close: {total}")
    return result


def seam_loop(bundle: ClutchBundle, samples: int = DEFAULT_WINDING_SAMPLES) -> list[Angle]:
    """Seam transition sampled along the y-loop on the rational grid k/samples."""
    return [
        transition(bundle, CHART_0, CHART_1, BasePoint(ZERO_ANGLE, Fraction(k, samples))).angle
        for k in range(samples)
    ]


def chern_oracle(bundle: ClutchBundle, samples: int = DEFAULT_WINDING_SAMPLES) -> int:
    return winding_number(seam_loop(bundle, samples))


@dataclass(frozen=True)
class Section:
    """A global section given by its canonical phase and its seam limit.

    ``phase(p)`` is the canonical phase at ``p`` (x in [0, 1)); ``left_limit(y)``
    is the limit of the canonical phase as ``x -> 1`` from below.  Inside the
    fundamental domain the phase is assumed continuous; the seam is where
    continuity has to be certified.
    """

    bundle: ClutchBundle
    phase: Callable[[BasePoint], Angle]
    left_limit: Callable[[Fraction], Angle]

    def __call__(self, p: BasePoint) -> FiberPoint:
        return FiberPoint(self.bundle, p, self.phase(p))


def seam_jumps(section: Section, samples: int = DEFAULT_WINDING_SAMPLES) -> list[Angle]:
    """Mismatch across the seam at each sampled y; all zero iff continuous there."""
    jumps = []
    for k in range(samples):
        y = Fraction(k, samples)
        glued = angle_add(section.left_limit(y), Angle(section.bundle.chern * y))
        right = section.phase(BasePoint(ZERO_ANGLE, y))
        jumps.append(angle_add(right, angle_neg(glued)))
    return jumps


@dataclass(frozen=True)
class GlobalSectionResult:
    section: Optional[Section]
    obstruction: int
    certificate: list = field(default_factory=list)

    @property
    def exists(self) -> bool:
        return self.section is not None


def global_section(bundle: ClutchBundle, samples: int = DEFAULT_WINDING_SAMPLES) -> GlobalSectionResult:
    """Constant-phase section with a seam certificate, or the nonzero obstruction."""
    obstruction = chern_oracle(bundle, samples)
    if obstruction != 0:
        return GlobalSectionResult(None, obstruction)
    section = Section(bundle, lambda p: ZERO_ANGLE, lambda y: ZERO_ANGLE)
    jumps = seam_jumps(section, samples)
    if any(not j.is_zero for j in jumps):
        raise ArithmeticError("constant section of a degree-zero bundle failed its seam check")
    return GlobalSectionResult(section, 0, jumps)
