"""Continuous 2-cocycles on G = X x| F2 and the twists they induce."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .. import sampling
from ..bundle import DEFAULT_WINDING_SAMPLES, TRIVIAL, chern_oracle
from ..errors import CocycleIdentityViolated, NotASection, NotInGrading
from ..exact_arith import ZERO_ANGLE, Angle, BasePoint, angle_add, angle_neg
from ..freegroup import Word, ell_a, ell_b, render_word
from .groupoid import (
    FreeTwist,
    GroupoidElement,
    g_invert,
    g_multiply,
    g_range,
    g_source,
    g_unit,
)

CocycleFn = Callable[[GroupoidElement, GroupoidElement], Angle]


@dataclass(frozen=True)
class TwoCocycle:
    fn: CocycleFn
    name: str = "sigma"

    def __call__(self, g1: GroupoidElement, g2: GroupoidElement) -> Angle:
        return self.fn(g1, g2)


def zero_cocycle() -> TwoCocycle:
    return TwoCocycle(lambda g1, g2: ZERO_ANGLE, "zero")


def bicharacter_cocycle(coefficient: Fraction = Fraction(1, 2)) -> TwoCocycle:
    """sigma(g1, g2) = coefficient * ell_a(w1) * ell_b(w2); constant on each G^w x G^w'."""
    coefficient = Fraction(coefficient)

    def fn(g1: GroupoidElement, g2: GroupoidElement) -> Angle:
        return Angle(coefficient * ell_a(g1.word) * ell_b(g2.word))

    return TwoCocycle(fn, f"{coefficient}*ell_a x ell_b")


def cocycle_identity_defect(sigma: CocycleFn, g1, g2, g3) -> Angle:
    """sigma(g1,g2) + sigma(g1g2,g3) - sigma(g1,g2g3) - sigma(g2,g3); zero for a cocycle."""
    lhs = angle_add(sigma(g1, g2), sigma(g_multiply(g1, g2), g3))
    rhs = angle_add(sigma(g1, g_multiply(g2, g3)), sigma(g2, g3))
    return angle_add(lhs, angle_neg(rhs))


def check_cocycle_identity(sigma: CocycleFn, triples) -> list[dict]:
    failures = []
    for g1, g2, g3 in triples:
        defect = cocycle_identity_defect(sigma, g1, g2, g3)
        if not defect.is_zero:
            failures.append(
                {
                    "case": "2-cocycle identity",
                    "witness": [str(g1), str(g2), str(g3)],
                    "expected": "0",
                    "got": str(defect),
                }
            )
    return failures


@dataclass(frozen=True, slots=True)
class CocycleElement:
    g: GroupoidElement
    z: Angle

    def __str__(self) -> str:
        return f"<{self.g} | {self.z}>"


class CocycleTwist:
    """E_sigma = G x T with (g, w)(h, z) = (gh, sigma(g, h) + z + w)."""

    def __init__(self, sigma: TwoCocycle, grading: FreeTwist | None = None):
        self.sigma = sigma
        self.grading = grading or FreeTwist()
        self.name = f"E_sigma[{sigma.name}]"

    def multiply(self, e1: CocycleElement, e2: CocycleElement) -> CocycleElement:
        g = g_multiply(e1.g, e2.g)
        return CocycleElement(g, angle_add(self.sigma(e1.g, e2.g), angle_add(e1.z, e2.z)))

    def invert(self, e: CocycleElement) -> CocycleElement:
        ginv = g_invert(e.g)
        return CocycleElement(ginv, angle_neg(angle_add(self.sigma(e.g, ginv), e.z)))

    def range(self, e: CocycleElement) -> CocycleElement:
        return CocycleElement(g_range(e.g), ZERO_ANGLE)

    def source(self, e: CocycleElement) -> CocycleElement:
        return CocycleElement(g_source(e.g), ZERO_ANGLE)

    def t_act(self, z: Angle, e: CocycleElement) -> CocycleElement:
        return CocycleElement(e.g, angle_add(z, e.z))

    def iota(self, x: BasePoint, z: Angle) -> CocycleElement:
        return CocycleElement(g_unit(x), z)

    def iota_preimage(self, e: CocycleElement):
        if e.g.word:
            return None
        return e.g.range_pt, e.z

    def pi(self, e: CocycleElement) -> GroupoidElement:
        return e.g

    def unit_point(self, u: GroupoidElement) -> BasePoint:
        return u.range_pt

    g_multiply = staticmethod(g_multiply)
    g_invert = staticmethod(g_invert)
    g_range = staticmethod(g_range)
    g_source = staticmethod(g_source)

    def g_is_unit(self, g: GroupoidElement) -> bool:
        return not g.word

    def random_element(self, rng) -> CocycleElement:
        return CocycleElement(self.grading.random_groupoid_element(rng), sampling.random_angle(rng))

    def random_composable(self, rng, k: int) -> list[CocycleElement]:
        return [CocycleElement(g, sampling.random_angle(rng)) for g in self.grading.random_composable_g(rng, k)]

    def random_composable_g(self, rng, k: int) -> list[GroupoidElement]:
        return self.grading.random_composable_g(rng, k)

    def canonical_section(self, g: GroupoidElement) -> CocycleElement:
        return CocycleElement(g, ZERO_ANGLE)

    def obstruction_certificate(self, word: Word, samples: int = DEFAULT_WINDING_SAMPLES) -> int:
        """E_sigma^w = G^w x T is the product bundle over G^w = X."""
        if not self.grading.word_filter(word):
            raise NotInGrading(f"{render_word(word)} is outside the grading")
        return chern_oracle(TRIVIAL, samples)


def build_cocycle_twist(sigma: TwoCocycle, rng, samples: int = 10_000, grading: FreeTwist | None = None) -> CocycleTwist:
    """Validate the 2-cocycle identity on sampled composable triples, then build E_sigma."""
    grading = grading or FreeTwist()
    for _ in range(samples):
        g1, g2, g3 = grading.random_composable_g(rng, 3)
        if not cocycle_identity_defect(sigma, g1, g2, g3).is_zero:
            raise CocycleIdentityViolated((str(g1), str(g2), str(g3)))
    return CocycleTwist(sigma, grading)


def cocycle_from_section(twist, section: Callable, rng=None, samples: int = 100) -> TwoCocycle:
    """The 2-cocycle with iota(r(g1), sigma(g1, g2)) = S(g1) S(g2) S(g1 g2)^-1.

    ``twist`` is any twist object (see :mod:`twistlab.twistcore.axioms`);
    ``section`` maps groupoid elements to twist elements.  When ``rng`` is
    given, ``pi o S = id`` is spot-checked on ``samples`` random elements.
    """
    if rng is not None:
        for _ in range(samples):
            (g,) = twist.random_composable_g(rng, 1)
            if twist.pi(section(g)) != g:
                raise NotASection(f"pi(S({g})) = {twist.pi(section(g))}")

    def fn(g1: GroupoidElement, g2: GroupoidElement) -> Angle:
        s1, s2, s12 = section(g1), section(g2), section(g_multiply(g1, g2))
        for g, s in ((g1, s1), (g2, s2)):
            if twist.pi(s) != g:
                raise NotASection(f"pi(S({g})) = {twist.pi(s)}")
        product = twist.multiply(twist.multiply(s1, s2), twist.invert(s12))
        pre = twist.iota_preimage(product)
        if pre is None or pre[0] != g1.range_pt:
            raise NotASection(f"S(g1)S(g2)S(g1g2)^-1 = {product} is not in iota(r(g1), T)")
        return pre[1]

    return TwoCocycle(fn, "from-section")
