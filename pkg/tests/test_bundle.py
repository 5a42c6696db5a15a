import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import angles, base_points
from twistlab import sampling
from twistlab.bundle import (
    CHART_0,
    CHART_1,
    CHARTS,
    NONTRIVIAL,
    TRIVIAL,
    ClutchBundle,
    FiberPoint,
    chern_oracle,
    conjugate,
    global_section,
    local_section,
    on_seam_strip,
    pairing,
    project,
    seam_loop,
    t_act,
    transition,
    transition_column,
    winding_number,
)
from twistlab.errors import BaseMismatch, NotInChart, NotInOverlap, SamplingTooCoarse
from twistlab.exact_arith import ZERO_ANGLE, Angle, BasePoint, angle_add, angle_neg, angle_to_float, base_point

F = Fraction
bundles = st.integers(-6, 6).map(ClutchBundle)


def fiber_points(bundle_strategy=bundles):
    return st.builds(FiberPoint, bundle_strategy, base_points, angles)


def float_unwrap_degree(values):
    """Independent winding oracle: unwrap float samples the numpy way and count turns."""
    xs = [float(angle_to_float(v)) for v in values]
    total = 0.0
    for i in range(len(xs)):
        d = xs[(i + 1) % len(xs)] - xs[i]
        d -= round(d)
        total += d
    return round(total)


# T-action and pairing


def test_t_act_examples():
    b = FiberPoint(NONTRIVIAL, base_point(F(1, 4), F(1, 2)), Angle(F(1, 4)))
    assert t_act(ZERO_ANGLE, b) == b
    assert t_act(Angle(F(1, 2)), b).phase == Angle(F(3, 4))
    z = Angle(F(1, 3), 2)
    assert t_act(angle_neg(z), t_act(z, b)) == b


@given(fiber_points(), angles)
def test_action_is_fibrewise_and_free(b, z):
    zb = t_act(z, b)
    assert project(zb) == project(b)
    assert (zb == b) == z.is_zero


@given(fiber_points(), angles, angles)
def test_action_composes(b, z, w):
    assert t_act(z, t_act(w, b)) == t_act(angle_add(z, w), b)


def test_pairing_examples():
    b = FiberPoint(NONTRIVIAL, base_point(F(1, 4), F(1, 2)), Angle(F(1, 7), 1))
    assert pairing(t_act(Angle(F(1, 3)), b), b) == Angle(F(1, 3))
    assert pairing(b, b) == ZERO_ANGLE


@given(bundles, base_points, angles, angles, angles)
def test_pairing_relations(bundle, p, t1, t2, z):
    b1, b2 = FiberPoint(bundle, p, t1), FiberPoint(bundle, p, t2)
    assert pairing(b1, b2) == angle_neg(pairing(b2, b1))
    assert pairing(t_act(z, b1), b2) == angle_add(z, pairing(b1, b2))
    assert pairing(b1, t_act(z, b2)) == angle_add(angle_neg(z), pairing(b1, b2))
    # principal: (pairing, b2) reconstructs b1
    assert t_act(pairing(b1, b2), b2) == b1


def test_pairing_rejects_different_fibres():
    p, q = base_point(0, F(1, 3)), base_point(0, F(1, 4))
    with pytest.raises(BaseMismatch):
        pairing(FiberPoint(NONTRIVIAL, p, ZERO_ANGLE), FiberPoint(NONTRIVIAL, q, ZERO_ANGLE))
    with pytest.raises(BaseMismatch):
        pairing(FiberPoint(NONTRIVIAL, p, ZERO_ANGLE), FiberPoint(TRIVIAL, p, ZERO_ANGLE))


def test_conjugate_examples():
    b = FiberPoint(NONTRIVIAL, base_point(F(1, 5), F(2, 5)), Angle(F(1, 3)))
    cb = conjugate(b)
    assert cb.bundle == ClutchBundle(-1) and cb.base == b.base and cb.phase == Angle(F(2, 3))
    assert conjugate(cb) == b


@given(fiber_points(), angles)
def test_conjugate_intertwines_action(b, z):
    assert conjugate(conjugate(b)) == b
    assert conjugate(t_act(z, b)) == t_act(angle_neg(z), conjugate(b))


def test_fiber_point_rendering():
    b = FiberPoint(NONTRIVIAL, base_point(Angle(F(1, 2), 1), F(1, 3)), Angle(F(1, 4)))
    assert str(b) == "L1@(1/2 + 1*theta; 1/3; 1/4)"


# charts and transitions


def test_charts_cover_the_circle_with_two_overlap_strips():
    rng = random.Random(3)
    for _ in range(2000):
        p = sampling.random_base_point(rng)
        assert CHART_0.contains(p) or CHART_1.contains(p)
        both = CHART_0.contains(p) and CHART_1.contains(p)
        assert both == (p.x.in_arc(0, F(1, 8)) or p.x.in_arc(F(1, 2), F(5, 8)))


def test_transition_examples():
    p = base_point(F(1, 16), F(1, 4))
    assert transition(NONTRIVIAL, CHART_0, CHART_1, p).angle == Angle(F(1, 4))
    assert transition(TRIVIAL, CHART_0, CHART_1, p).angle == ZERO_ANGLE
    assert transition(NONTRIVIAL, CHART_1, CHART_0, p).angle == Angle(F(3, 4))
    # second overlap strip carries no twist
    assert transition(NONTRIVIAL, CHART_0, CHART_1, base_point(F(9, 16), F(1, 4))).angle == ZERO_ANGLE


@given(bundles, base_points)
def test_transition_cocycle_inverse(bundle, p):
    if not (CHART_0.contains(p) and CHART_1.contains(p)):
        with pytest.raises(NotInOverlap):
            transition(bundle, CHART_0, CHART_1, p)
        return
    forward = transition(bundle, CHART_0, CHART_1, p).angle
    assert transition(bundle, CHART_1, CHART_0, p).angle == angle_neg(forward)
    assert forward.is_rational
    assert transition(bundle, CHART_0, CHART_0, p).angle == ZERO_ANGLE


@given(bundles, base_points)
def test_local_sections_differ_by_transition(bundle, p):
    for chart in CHARTS:
        if chart.contains(p):
            assert project(local_section(bundle, chart)(p)) == p
        else:
            with pytest.raises(NotInChart):
                local_section(bundle, chart)(p)
    if CHART_0.contains(p) and CHART_1.contains(p):
        s0, s1 = local_section(bundle, CHART_0)(p), local_section(bundle, CHART_1)(p)
        assert pairing(s0, s1) == transition(bundle, CHART_1, CHART_0, p).angle


def test_chart0_section_example_and_projection_on_many_points():
    assert local_section(NONTRIVIAL, CHART_0)(base_point(F(1, 4), F(1, 3))).phase == ZERO_ANGLE
    rng = random.Random(11)
    for _ in range(1000):
        p = sampling.random_base_point(rng)
        chart = CHART_0 if CHART_0.contains(p) else CHART_1
        assert project(local_section(NONTRIVIAL, chart)(p)) == p


def test_chart1_section_is_continuous_across_the_seam():
    # just left of x = 1 the chart-1 section has canonical phase 0; just right of
    # x = 0 it has phase n*y, which is exactly the gluing (1, y, t) ~ (0, y, t + n y)
    bundle = ClutchBundle(3)
    for k in range(16):
        y = F(k, 16)
        left = local_section(bundle, CHART_1)(base_point(F(1023, 1024), y)).phase
        right = local_section(bundle, CHART_1)(base_point(0, y)).phase
        assert right == angle_add(left, Angle(3 * y))


@given(bundles, st.sampled_from([0, F(1, 32), F(1, 2), F(17, 32)]), st.integers(1, 64))
def test_transition_column_matches_pointwise(bundle, x, n):
    ys = [F(k, n) for k in range(n)]
    col = transition_column(bundle, CHART_0, CHART_1, Angle(x), ys)
    assert col == [transition(bundle, CHART_0, CHART_1, BasePoint(Angle(x), y)).angle for y in ys]


# winding numbers


def test_winding_examples():
    assert winding_number([Angle(F(1, 3))] * 50) == 0
    assert winding_number([Angle(F(k, 1024)) for k in range(1024)]) == 1
    assert winding_number([Angle(F(3 * k, 1024)) for k in range(1024)]) == 3
    assert winding_number([]) == 0


@given(st.integers(-8, 8), st.integers(40, 300), angles)
def test_winding_matches_float_unwrap(n, samples, shift):
    loop = [angle_add(shift, Angle(F(n * k, samples))) for k in range(samples)]
    assert winding_number(loop) == n == float_unwrap_degree(loop)


def test_winding_of_irrational_loop():
    # k -> k*theta/200 is not representable; use theta multiples mixed with a rational sweep
    loop = [Angle(F(2 * k, 512), (k % 2)) for k in range(512)]
    # alternate +-theta ~ 0.618 steps are too long to lift
    with pytest.raises(SamplingTooCoarse):
        winding_number(loop)
    smooth = [angle_add(Angle(0, 1), Angle(F(-2 * k, 512))) for k in range(512)]
    assert winding_number(smooth) == -2 == float_unwrap_degree(smooth)


def test_winding_rejects_coarse_sampling():
    with pytest.raises(SamplingTooCoarse) as info:
        winding_number([Angle(F(k, 3)) for k in range(3)])
    assert info.value.index == 0


def test_chern_oracle_examples():
    assert chern_oracle(TRIVIAL) == 0
    assert chern_oracle(NONTRIVIAL) == 1
    assert chern_oracle(ClutchBundle(-2)) == -2


@given(st.integers(-8, 8))
def test_chern_oracle_matches_independent_unwrap(n):
    bundle = ClutchBundle(n)
    assert chern_oracle(bundle) == n == float_unwrap_degree(seam_loop(bundle, 256))
    assert chern_oracle(bundle.conjugate()) == -chern_oracle(bundle)


def test_global_section_examples():
    r0 = global_section(TRIVIAL)
    assert r0.exists and r0.obstruction == 0
    rng = random.Random(5)
    for _ in range(200):
        p = sampling.random_base_point(rng)
        assert r0.section(p).phase == ZERO_ANGLE
    assert all(j.is_zero for j in r0.certificate)
    r1 = global_section(NONTRIVIAL)
    assert not r1.exists and r1.obstruction == 1
    r5 = global_section(ClutchBundle(5))
    assert not r5.exists and r5.obstruction == 5


def test_on_seam_strip():
    assert on_seam_strip(base_point(0, 0))
    assert not on_seam_strip(base_point(F(1, 8), 0))
    assert on_seam_strip(base_point(Angle(F(1, 2), 1), 0)) == (math.fmod(0.5 + (5**0.5 - 1) / 2, 1) < 0.125)
