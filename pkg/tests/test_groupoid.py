import random
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import angles, base_points, words
from twistlab import sampling
from twistlab.errors import NotComposable, NotInGrading, NotSubgroupoid
from twistlab.exact_arith import ZERO_ANGLE, Angle, BasePoint, angle_add, base_point, rotate_x
from twistlab.freegroup import EPSILON, ell_a, enumerate_words, parse_word
from twistlab.twistcore.axioms import check_centrality, check_groupoid_axioms, check_twist_axioms
from twistlab.twistcore.elements import ClassRep, alpha, t_act_class
from twistlab.twistcore.groupoid import (
    FreeTwist,
    GroupoidElement,
    TwistElement,
    closure_witness,
    e_invert,
    e_multiply,
    e_range,
    e_source,
    g_element,
    g_invert,
    g_multiply,
    g_range,
    g_source,
    g_unit,
    in_ker_ell_a,
    iota,
    is_isotropic,
    isotropy_interior,
    isotropy_twist,
    pi,
    restrict_twist,
    t_act_element,
    unit,
)
from twistlab.twistcore.psi import psi

F = Fraction


def element(word, base, phase=ZERO_ANGLE):
    return TwistElement.of(ClassRep(parse_word(word), base, phase))


# units, inverses, range and source


def test_unit_times_element():
    e = element("ab", base_point(F(1, 3), F(1, 7)), Angle(F(1, 2), 1))
    assert e_multiply(e_range(e), e) == e
    assert e_multiply(e, e_source(e)) == e


@given(words, base_points, angles)
def test_element_times_inverse_is_range_unit(w, p, t):
    e = TwistElement.of(ClassRep(w, p, t))
    assert e_multiply(e, e_invert(e)) == e_range(e) == unit(alpha(w, p))
    assert e_multiply(e_invert(e), e) == e_source(e) == unit(p)
    assert e_invert(e_invert(e)) == e
    assert e_range(e) == e_source(e_invert(e))


def test_inverse_involution_on_ten_thousand_samples():
    twist, rng = FreeTwist(), random.Random(8)
    for _ in range(10_000):
        e = twist.random_element(rng)
        assert e_invert(e_invert(e)) == e


def test_unit_is_its_own_inverse_range_and_source():
    u = unit(base_point(F(1, 9), F(2, 9)))
    assert e_invert(u) == u and e_range(u) == u and e_source(u) == u


def test_range_of_a_and_b():
    p = base_point(F(1, 4), F(1, 3))
    assert e_range(element("a", p)).base == rotate_x(p)
    assert e_range(element("b", p)) == e_source(element("b", p))


def test_b_times_b_graded_product():
    p = base_point(F(2, 5), F(1, 6))
    e = e_multiply(element("b", p, Angle(F(1, 3))), element("b", p, Angle(F(1, 5))))
    assert e == element("bb", p, Angle(F(8, 15)))


def test_twist_element_checks_word():
    with pytest.raises(ValueError):
        TwistElement(parse_word("a"), ClassRep(parse_word("b"), base_point(0, 0), ZERO_ANGLE))


# the quotient groupoid G


def test_g_examples():
    x = base_point(F(1, 3), F(1, 2))
    sx = rotate_x(x)
    ga = GroupoidElement(sx, parse_word("a"), x)
    gA = GroupoidElement(x, parse_word("A"), sx)
    assert g_multiply(ga, gA) == GroupoidElement(sx, EPSILON, sx)
    gb = g_element(parse_word("b"), x)
    assert g_multiply(gb, gb) == GroupoidElement(x, parse_word("bb"), x)
    with pytest.raises(ValueError):
        GroupoidElement(x, parse_word("a"), x)
    with pytest.raises(NotComposable):
        g_multiply(ga, ga)


def test_g_associativity_and_inverses_on_samples():
    twist, rng = FreeTwist(), random.Random(12)
    for _ in range(2000):
        g1, g2, g3 = twist.random_composable_g(rng, 3)
        assert g_multiply(g_multiply(g1, g2), g3) == g_multiply(g1, g_multiply(g2, g3))
        assert g_multiply(g1, g_invert(g1)) == g_range(g1)
        assert g_multiply(g_invert(g1), g1) == g_source(g1)
        assert g_range(g1) == g_unit(g1.range_pt)


# iota and pi


@given(base_points, angles, angles)
def test_iota(x, z, w):
    assert iota(x, ZERO_ANGLE) == unit(x)
    assert e_multiply(iota(x, z), iota(x, w)) == iota(x, angle_add(z, w))
    assert pi(iota(x, z)) == g_unit(x)


def test_pi_examples():
    p = base_point(F(1, 8), F(3, 8))
    assert pi(element("b", p, Angle(F(1, 3)))) == GroupoidElement(p, parse_word("b"), p)


def test_pi_is_a_homomorphism_on_samples():
    twist, rng = FreeTwist(), random.Random(13)
    for _ in range(2000):
        e1, e2 = twist.random_composable(rng, 2)
        assert pi(e_multiply(e1, e2)) == g_multiply(pi(e1), pi(e2))
        z = sampling.random_angle(rng)
        assert pi(t_act_element(z, e1)) == pi(e1)
        assert e_multiply(e1, e2).word == e1.word * e2.word


# axiom checkers and fault injection


def test_axiom_checkers_pass_on_e():
    twist, rng = FreeTwist(), random.Random(21)
    assert check_groupoid_axioms(twist, rng, 500) == []
    assert check_twist_axioms(twist, rng, 500) == []


def test_centrality_zero_angle_trivially_holds():
    twist = FreeTwist()
    e = element("bA", base_point(F(1, 3), F(1, 5)), Angle(F(1, 4)))
    x_r = twist.unit_point(twist.pi(twist.range(e)))
    x_s = twist.unit_point(twist.pi(twist.source(e)))
    assert twist.multiply(twist.iota(x_r, ZERO_ANGLE), e) == twist.multiply(e, twist.iota(x_s, ZERO_ANGLE))


def _mutated_psi(c, c2, **kw):
    # plant a fault: units acting from the left pick up an extra 1/7
    out = psi(c, c2, **kw)
    if not c.word and c2.word:
        return t_act_class(Angle(F(1, 7)), out)
    return out


def test_centrality_detects_a_mutated_psi():
    bad = FreeTwist(psi=_mutated_psi)
    failures = check_centrality(bad, random.Random(5), 200)
    assert failures
    assert failures[0]["case"] == "centrality"
    assert set(failures[0]) == {"case", "witness", "expected", "got"}


def test_groupoid_checker_detects_a_mutated_psi():
    bad = FreeTwist(psi=_mutated_psi)
    assert check_groupoid_axioms(bad, random.Random(5), 200)


# isotropy


def test_isotropy_examples():
    x = base_point(F(1, 5), F(1, 5))
    g = g_element(parse_word("baBA"), x)
    assert isotropy_interior(g) and g.range_pt == g.source_pt
    rng = random.Random(6)
    for _ in range(200):
        ga = g_element(parse_word("a"), sampling.random_base_point(rng))
        assert not isotropy_interior(ga) and ga.range_pt != ga.source_pt


def test_isotropy_iff_ell_a_zero_for_words_up_to_four():
    rng = random.Random(16)
    for w in enumerate_words(4):
        for _ in range(10):
            g = g_element(w, sampling.random_base_point(rng))
            assert is_isotropic(g) == (ell_a(w) == 0) == isotropy_interior(g)


# restrictions


def test_restrict_to_units_is_the_trivial_twist():
    t = restrict_twist(lambda w: not w, name="units")
    assert t.words() == [EPSILON]
    rng = random.Random(3)
    e1, e2 = t.random_composable(rng, 2)
    assert e1.word == EPSILON and t.multiply(e1, e2).word == EPSILON
    assert check_twist_axioms(t, rng, 100) == []


def test_isotropy_twist_contains_b_but_not_a():
    it = isotropy_twist()
    assert parse_word("b") in it.words()
    assert parse_word("a") not in it.words()
    p = base_point(0, F(1, 3))
    with pytest.raises(NotInGrading):
        it.multiply(element("a", rotate_x(p, -1)), element("A", p))
    assert check_twist_axioms(it, random.Random(1), 300) == []


def test_not_subgroupoid_witnesses():
    with pytest.raises(NotSubgroupoid) as info:
        restrict_twist(lambda w: len(w) <= 1)
    assert info.value.witness == ("a", "a")
    with pytest.raises(NotSubgroupoid) as info:
        restrict_twist(lambda w: "A" not in w)
    assert info.value.witness == ("a", "^-1")
    with pytest.raises(NotSubgroupoid):
        restrict_twist(lambda w: bool(w))


def test_even_length_words_form_a_subgroup():
    # length parity is a homomorphism to Z/2, so this filter is closed
    assert closure_witness(lambda w: len(w) % 2 == 0) is None
    restrict_twist(lambda w: len(w) % 2 == 0)
    assert closure_witness(in_ker_ell_a) is None


def test_random_composable_chains_compose():
    twist, rng = FreeTwist(), random.Random(30)
    for _ in range(300):
        chain = twist.random_composable(rng, 4)
        for left, right in zip(chain, chain[1:]):
            assert twist.source(left) == twist.range(right)
    assert isinstance(chain[0].base, BasePoint)
