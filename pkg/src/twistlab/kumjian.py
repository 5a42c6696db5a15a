"""Kumjian's twist over X x R_2, with X the torus and B = L_1.

G = X x R_2 is the product of the space X with the pair groupoid on {0, 1}.
Over the units sit two copies of X x T; over the arrow (0,1) sits B and over
(1,0) its conjugate.  The full twist contains B, so it has no continuous
section; the isotropy of G is just its unit space, where the twist is the
trivial one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import sampling
from .bundle import (
    DEFAULT_WINDING_SAMPLES,
    TRIVIAL,
    ClutchBundle,
    FiberPoint,
    chern_oracle,
    conjugate,
    pairing,
    t_act,
)
from .errors import NotComposable
from .exact_arith import ZERO_ANGLE, Angle, BasePoint, angle_add, angle_neg

B_BUNDLE = ClutchBundle(1)
ARROWS = ((0, 0), (1, 1), (0, 1), (1, 0))


@dataclass(frozen=True, slots=True)
class KGroupoidElement:
    point: BasePoint
    arrow: tuple[int, int]

    def __post_init__(self):
        if self.arrow not in ARROWS:
            raise ValueError(f"not an arrow of R_2: {self.arrow}")

    def __str__(self) -> str:
        return f"({self.point}, {self.arrow})"


def kg_multiply(g1: KGroupoidElement, g2: KGroupoidElement) -> KGroupoidElement:
    if g1.point != g2.point or g1.arrow[1] != g2.arrow[0]:
        raise NotComposable((g1.point, g1.arrow[1]), (g2.point, g2.arrow[0]))
    return KGroupoidElement(g1.point, (g1.arrow[0], g2.arrow[1]))


def kg_invert(g: KGroupoidElement) -> KGroupoidElement:
    return KGroupoidElement(g.point, (g.arrow[1], g.arrow[0]))


def kg_range(g: KGroupoidElement) -> KGroupoidElement:
    return KGroupoidElement(g.point, (g.arrow[0], g.arrow[0]))


def kg_source(g: KGroupoidElement) -> KGroupoidElement:
    return KGroupoidElement(g.point, (g.arrow[1], g.arrow[1]))


@dataclass(frozen=True, slots=True)
class KUnit:
    """(x, z, i) in X x T x {i}."""

    point: BasePoint
    z: Angle
    i: int

    def __str__(self) -> str:
        return f"({self.point}, {self.z}, {self.i})"


@dataclass(frozen=True, slots=True)
class KArrow:
    """(b, (0,1)) with b in B."""

    b: FiberPoint

    def __str__(self) -> str:
        return f"({self.b}, (0,1))"


@dataclass(frozen=True, slots=True)
class KBarArrow:
    """(c-bar, (1,0)) with c-bar in the conjugate bundle, stored with the additive action."""

    cbar: FiberPoint

    def __str__(self) -> str:
        return f"({self.cbar}, (1,0))"


KTwistElement = Union[KUnit, KArrow, KBarArrow]


def _point(e: KTwistElement) -> BasePoint:
    if isinstance(e, KUnit):
        return e.point
    if isinstance(e, KArrow):
        return e.b.base
    return e.cbar.base


def k_pi(e: KTwistElement) -> KGroupoidElement:
    if isinstance(e, KUnit):
        return KGroupoidElement(e.point, (e.i, e.i))
    if isinstance(e, KArrow):
        return KGroupoidElement(e.b.base, (0, 1))
    return KGroupoidElement(e.cbar.base, (1, 0))


def k_range(e: KTwistElement) -> KUnit:
    g = k_pi(e)
    return KUnit(g.point, ZERO_ANGLE, g.arrow[0])


def k_source(e: KTwistElement) -> KUnit:
    g = k_pi(e)
    return KUnit(g.point, ZERO_ANGLE, g.arrow[1])


def k_invert(e: KTwistElement) -> KTwistElement:
    if isinstance(e, KUnit):
        return KUnit(e.point, angle_neg(e.z), e.i)
    if isinstance(e, KArrow):
        return KBarArrow(conjugate(e.b))
    return KArrow(conjugate(e.cbar))


def theta_l(b: FiberPoint, cbar: FiberPoint) -> Angle:
    """theta_l([b, c-bar]) = <b, c>; in particular theta_l([z.b, b-bar]) = z."""
    return pairing(b, conjugate(cbar))


def theta_r(cbar: FiberPoint, b: FiberPoint) -> Angle:
    """theta_r([c-bar, b]) = <b, c>; in particular theta_r([b-bar, z.b]) = z."""
    return pairing(b, conjugate(cbar))


def k_multiply(e1: KTwistElement, e2: KTwistElement) -> KTwistElement:
    s1, r2 = k_source(e1), k_range(e2)
    if s1 != r2:
        raise NotComposable((s1.point, s1.i), (r2.point, r2.i))
    if isinstance(e1, KUnit) and isinstance(e2, KUnit):
        return KUnit(e1.point, angle_add(e1.z, e2.z), e1.i)
    if isinstance(e1, KUnit):
        if isinstance(e2, KArrow):
            return KArrow(t_act(e1.z, e2.b))
        return KBarArrow(t_act(e1.z, e2.cbar))
    if isinstance(e2, KUnit):
        if isinstance(e1, KArrow):
            return KArrow(t_act(e2.z, e1.b))
        return KBarArrow(t_act(e2.z, e1.cbar))
    if isinstance(e1, KArrow):
        # (b,(0,1)) (c-bar,(1,0)) = (p(b), theta_l([b, c-bar]), 0)
        return KUnit(e1.b.base, theta_l(e1.b, e2.cbar), 0)
    # (c-bar,(1,0)) (b,(0,1)) = (p(b), theta_r([c-bar, b]), 1)
    return KUnit(e2.b.base, theta_r(e1.cbar, e2.b), 1)


def k_t_act(z: Angle, e: KTwistElement) -> KTwistElement:
    return k_multiply(KUnit(_point(e), z, k_range(e).i), e)


class KumjianTwist:
    """Twist object for the axiom checkers in :mod:`twistlab.twistcore.axioms`."""

    name = "kumjian"

    def __init__(self, arrows=ARROWS):
        self.arrows = tuple(arrows)

    multiply = staticmethod(k_multiply)
    invert = staticmethod(k_invert)
    range = staticmethod(k_range)
    source = staticmethod(k_source)
    pi = staticmethod(k_pi)
    g_multiply = staticmethod(kg_multiply)
    g_invert = staticmethod(kg_invert)
    g_range = staticmethod(kg_range)
    g_source = staticmethod(kg_source)

    def t_act(self, z: Angle, e: KTwistElement) -> KTwistElement:
        return k_t_act(z, e)

    def iota(self, unit_point: tuple[BasePoint, int], z: Angle) -> KUnit:
        x, i = unit_point
        return KUnit(x, z, i)

    def iota_preimage(self, e: KTwistElement):
        if isinstance(e, KUnit):
            return (e.point, e.i), e.z
        return None

    def unit_point(self, g: KGroupoidElement) -> tuple[BasePoint, int]:
        return g.point, g.arrow[0]

    def g_is_unit(self, g: KGroupoidElement) -> bool:
        return g.arrow[0] == g.arrow[1]

    def element_over(self, x: BasePoint, arrow: tuple[int, int], z: Angle) -> KTwistElement:
        if arrow[0] == arrow[1]:
            return KUnit(x, z, arrow[0])
        if arrow == (0, 1):
            return KArrow(FiberPoint(B_BUNDLE, x, z))
        return KBarArrow(FiberPoint(B_BUNDLE.conjugate(), x, z))

    def random_composable(self, rng, k: int) -> list[KTwistElement]:
        x = sampling.random_base_point(rng)
        chain = []
        arrow = rng.choice(self.arrows)
        chain.append(self.element_over(x, arrow, sampling.random_angle(rng)))
        while len(chain) < k:
            target = chain[0]
            r = k_range(target).i
            choices = [a for a in self.arrows if a[1] == r]
            chain.insert(0, self.element_over(x, rng.choice(choices), sampling.random_angle(rng)))
        return chain

    def random_composable_g(self, rng, k: int) -> list[KGroupoidElement]:
        return [k_pi(e) for e in self.random_composable(rng, k)]


def iso_twist() -> KumjianTwist:
    """Restriction to Iso(G) = G^(0)."""
    return KumjianTwist(arrows=((0, 0), (1, 1)))


def zero_section(g: KGroupoidElement) -> KUnit:
    """iota(., 0) on units: the explicit continuous section over Iso(G)."""
    if g.arrow[0] != g.arrow[1]:
        raise ValueError(f"{g} is not isotropic")
    return KUnit(g.point, ZERO_ANGLE, g.arrow[0])


@dataclass(frozen=True)
class EffectivenessReport:
    isotropic_arrows: tuple
    non_unit_isotropy: tuple
    iso_certificate: int
    full_certificate: int
    section_defects: list

    @property
    def passed(self) -> bool:
        return (
            not self.non_unit_isotropy
            and self.iso_certificate == 0
            and self.full_certificate != 0
            and not self.section_defects
        )


def component_certificate(arrow: tuple[int, int], samples: int = DEFAULT_WINDING_SAMPLES) -> int:
    """Chern number of the fibre of pi over X x {arrow}."""
    if arrow[0] == arrow[1]:
        return chern_oracle(TRIVIAL, samples)
    bundle = B_BUNDLE if arrow == (0, 1) else B_BUNDLE.conjugate()
    return chern_oracle(bundle, samples)


def k_effectiveness_check(rng=None, samples: int = 200) -> EffectivenessReport:
    """Iso(G) = G^(0) exactly, the twist over it has a section, the full twist does not."""
    rng = rng or sampling.make_rng(0)
    # X acts trivially, so g is isotropic iff r(g) = s(g); test at a sample point
    x = sampling.random_base_point(rng)
    isotropic = tuple(a for a in ARROWS if kg_range(KGroupoidElement(x, a)) == kg_source(KGroupoidElement(x, a)))
    non_unit = tuple(a for a in isotropic if a[0] != a[1])
    iso = iso_twist()
    iso_cert = max(abs(component_certificate(a)) for a in isotropic)
    full_cert = component_certificate((0, 1))

    defects = []
    for _ in range(samples):
        g1, g2 = iso.random_composable_g(rng, 2)
        s = iso.multiply(iso.multiply(zero_section(g1), zero_section(g2)), iso.invert(zero_section(kg_multiply(g1, g2))))
        if s != KUnit(g1.point, ZERO_ANGLE, g1.arrow[0]):
            defects.append((str(g1), str(g2), str(s)))
    return EffectivenessReport(isotropic, non_unit, iso_cert, full_cert, defects)
