"""The groupoid E = disjoint union of the B^w, the quotient G = X x| F2, and the twist maps."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from ..errors import NotComposable, NotInGrading, NotSubgroupoid
from ..exact_arith import ZERO_ANGLE, Angle, BasePoint
from ..freegroup import EPSILON, Word, ell_a, enumerate_words, invert, multiply, render_word
from .. import sampling
from .elements import ClassRep, alpha, bar, render_class, t_act_class, unit_class
from .psi import psi as default_psi

WordFilter = Callable[[Word], bool]


@dataclass(frozen=True, slots=True)
class TwistElement:
    word: Word
    cls: ClassRep

    def __post_init__(self):
        if self.cls.word != self.word:
            raise ValueError(f"class lives in B^{render_word(self.cls.word)}, not B^{render_word(self.word)}")

    @classmethod
    def of(cls, c: ClassRep) -> TwistElement:
        return cls(c.word, c)

    @property
    def base(self) -> BasePoint:
        return self.cls.base

    @property
    def phase(self) -> Angle:
        return self.cls.total_phase

    def __str__(self) -> str:
        return render_class(self.cls)


@dataclass(frozen=True, slots=True)
class GroupoidElement:
    """(alpha_w(x), w, x) in G."""

    range_pt: BasePoint
    word: Word
    source_pt: BasePoint

    def __post_init__(self):
        if alpha(self.word, self.source_pt) != self.range_pt:
            raise ValueError(f"{self.range_pt} is not alpha_{render_word(self.word)}({self.source_pt})")

    def __str__(self) -> str:
        return f"({self.range_pt}, {render_word(self.word)}, {self.source_pt})"


def g_element(word: Word, source_pt: BasePoint) -> GroupoidElement:
    return GroupoidElement(alpha(word, source_pt), word, source_pt)


def g_unit(x: BasePoint) -> GroupoidElement:
    return GroupoidElement(x, EPSILON, x)


def g_multiply(g1: GroupoidElement, g2: GroupoidElement) -> GroupoidElement:
    if g1.source_pt != g2.range_pt:
        raise NotComposable(g1.source_pt, g2.range_pt)
    return GroupoidElement(g1.range_pt, multiply(g1.word, g2.word), g2.source_pt)


def g_invert(g: GroupoidElement) -> GroupoidElement:
    return GroupoidElement(g.source_pt, invert(g.word), g.range_pt)


def g_range(g: GroupoidElement) -> GroupoidElement:
    return g_unit(g.range_pt)


def g_source(g: GroupoidElement) -> GroupoidElement:
    return g_unit(g.source_pt)


def e_multiply(e1: TwistElement, e2: TwistElement, psi=default_psi) -> TwistElement:
    return TwistElement.of(psi(e1.cls, e2.cls))


def e_invert(e: TwistElement) -> TwistElement:
    return TwistElement.of(bar(e.cls))


def e_source(e: TwistElement) -> TwistElement:
    return TwistElement.of(unit_class(e.base))


def e_range(e: TwistElement) -> TwistElement:
    return TwistElement.of(unit_class(alpha(e.word, e.base)))


def iota(x: BasePoint, z: Angle) -> TwistElement:
    return TwistElement.of(unit_class(x, z))


def pi(e: TwistElement) -> GroupoidElement:
    return GroupoidElement(alpha(e.word, e.base), e.word, e.base)


def t_act_element(z: Angle, e: TwistElement) -> TwistElement:
    return TwistElement.of(t_act_class(z, e.cls))


def isotropy_interior(g: GroupoidElement) -> bool:
    """Membership in the interior of the isotropy: the a-count of the word vanishes."""
    return ell_a(g.word) == 0


def is_isotropic(g: GroupoidElement) -> bool:
    return g.range_pt == g.source_pt


def all_words(word: Word) -> bool:
    return True


def in_ker_ell_a(word: Word) -> bool:
    return ell_a(word) == 0


def closure_witness(word_filter: WordFilter, max_length: int = 4) -> Optional[tuple]:
    """First failure of subgroup closure among words of length <= max_length, if any."""
    if not word_filter(EPSILON):
        return ("e",)
    members = [w for w in enumerate_words(max_length) if word_filter(w)]
    for u in members:
        if not word_filter(invert(u)):
            return (render_word(u), "^-1")
    for u in members:
        for v in members:
            if not word_filter(multiply(u, v)):
                return (render_word(u), render_word(v))
    return None


class FreeTwist:
    """The twist E -> G, optionally restricted to the words accepted by a filter.

    The filter must define a subgroup of F2 (checked by a witness search over
    short words in :func:`restrict_twist`).  ``psi`` is injectable so that test
    harnesses can plant faults.
    """

    name = "E"

    def __init__(
        self,
        word_filter: WordFilter = all_words,
        *,
        name: str | None = None,
        psi: Callable = default_psi,
        max_word_length: int = 4,
    ):
        self.word_filter = word_filter
        self.psi = psi
        self.max_word_length = max_word_length
        self._sample_words = [w for w in enumerate_words(max_word_length) if word_filter(w)]
        if name:
            self.name = name

    # groupoid E
    def contains(self, e: TwistElement) -> bool:
        return self.word_filter(e.word)

    def _require(self, e: TwistElement) -> None:
        if not self.word_filter(e.word):
            raise NotInGrading(f"{render_word(e.word)} is outside the grading of {self.name}")

    def multiply(self, e1: TwistElement, e2: TwistElement) -> TwistElement:
        self._require(e1)
        self._require(e2)
        return e_multiply(e1, e2, self.psi)

    def invert(self, e: TwistElement) -> TwistElement:
        return e_invert(e)

    def range(self, e: TwistElement) -> TwistElement:
        return e_range(e)

    def source(self, e: TwistElement) -> TwistElement:
        return e_source(e)

    def t_act(self, z: Angle, e: TwistElement) -> TwistElement:
        return t_act_element(z, e)

    # twist structure
    def iota(self, x: BasePoint, z: Angle) -> TwistElement:
        return iota(x, z)

    def iota_preimage(self, e: TwistElement):
        if e.word:
            return None
        return e.base, e.phase

    def pi(self, e: TwistElement) -> GroupoidElement:
        return pi(e)

    def unit_point(self, u: GroupoidElement) -> BasePoint:
        return u.range_pt

    def g_multiply(self, g1, g2):
        return g_multiply(g1, g2)

    def g_invert(self, g):
        return g_invert(g)

    def g_range(self, g):
        return g_range(g)

    def g_source(self, g):
        return g_source(g)

    def g_is_unit(self, g: GroupoidElement) -> bool:
        return not g.word

    # sampling
    def random_word(self, rng) -> Word:
        return rng.choice(self._sample_words)

    def random_element(self, rng, *, over: BasePoint | None = None) -> TwistElement:
        """Random element; with ``over`` given, one whose source is that point."""
        word = self.random_word(rng)
        base = over if over is not None else sampling.random_base_point(rng)
        return TwistElement.of(ClassRep(word, base, sampling.random_angle(rng)))

    def random_element_with_range(self, rng, x: BasePoint) -> TwistElement:
        word = self.random_word(rng)
        base = alpha(invert(word), x)
        return TwistElement.of(ClassRep(word, base, sampling.random_angle(rng)))

    def random_composable(self, rng, k: int) -> list[TwistElement]:
        """k elements e_1..e_k with s(e_i) = r(e_{i+1})."""
        chain = [self.random_element(rng)]
        while len(chain) < k:
            target = alpha(chain[0].word, chain[0].base)
            chain.insert(0, self.random_element(rng, over=target))
        return chain

    def random_groupoid_element(self, rng) -> GroupoidElement:
        return g_element(self.random_word(rng), sampling.random_base_point(rng))

    def random_composable_g(self, rng, k: int) -> list[GroupoidElement]:
        return [self.pi(e) for e in self.random_composable(rng, k)]

    def words(self) -> Iterable[Word]:
        return list(self._sample_words)


def restrict_twist(
    word_filter: WordFilter,
    *,
    name: str = "E|restricted",
    search_length: int = 4,
    max_word_length: int = 4,
    psi: Callable = default_psi,
) -> FreeTwist:
    """The twist over the subgroupoid of G graded by the words accepted by ``word_filter``."""
    witness = closure_witness(word_filter, search_length)
    if witness is not None:
        raise NotSubgroupoid(witness)
    return FreeTwist(word_filter, name=name, psi=psi, max_word_length=max_word_length)


def isotropy_twist(**kwargs) -> FreeTwist:
    """The restriction of E to the interior of the isotropy, graded by ker(ell_a)."""
    return restrict_twist(in_ker_ell_a, name="I^E", **kwargs)


def unit(x: BasePoint) -> TwistElement:
    return iota(x, ZERO_ANGLE)
