"""Winding-number obstructions for the fibres E^w of a twist.

E^w is identified with B^w (the source map s_w: G^w -> X pulls pi back to
p^w).  B^w is glued from the letter bundles C^{w_i}, each pulled back along
the rotation alpha_{w_{i+1} ... w_n}.  Going once around the x-circle at
height y, a section crosses the seam of every pulled-back letter bundle; the
composite clutching value is the sum of their seam transitions, and its
winding in y is the Chern number of B^w.  A nonzero value rules out a
continuous section over G^w.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..bundle import CHART_0, CHART_1, DEFAULT_WINDING_SAMPLES, transition_column, winding_number
from ..exact_arith import ZERO_ANGLE, Angle, BasePoint, _sign_quadratic, angle_sum
from ..freegroup import Word, ell_b, invert, render_word
from ..errors import NotInGrading
from .elements import ClassRep, alpha, letter_bundle
from .groupoid import FreeTwist, TwistElement


@dataclass(frozen=True)
class Seam:
    """Seam of one pulled-back letter bundle, at ``x = frac(position)`` in p^w-coordinates."""

    index: int
    letter: str
    chern: int
    position: Angle


def word_seams(word: Word) -> list[Seam]:
    seams = []
    for i, letter in enumerate(word):
        suffix = Word._trusted(word[i + 1 :])
        # alpha_suffix(u) must land on the letter bundle's own seam x = 0
        u = alpha(invert(suffix), BasePoint(ZERO_ANGLE, Fraction(0)))
        seams.append(Seam(i + 1, letter, letter_bundle(letter).bundle.chern, u.x))
    return seams


def word_seam_loop(word: Word, samples: int = DEFAULT_WINDING_SAMPLES) -> list[Angle]:
    """Composite seam transition of B^w sampled at y = k/samples."""
    pieces = []
    for s in word_seams(word):
        suffix = Word._trusted(word[s.index :])
        # alpha moves only the x-coordinate, so the pulled-back seam sits at a fixed x
        x = alpha(suffix, BasePoint(s.position, Fraction(0))).x
        pieces.append((letter_bundle(s.letter).bundle, x))
    ys = [Fraction(k, samples) for k in range(samples)]
    columns = [transition_column(bundle, CHART_0, CHART_1, x, ys) for bundle, x in pieces]
    if not columns:
        return [ZERO_ANGLE] * samples
    return [angle_sum(values) for values in zip(*columns)]


def _check_identification(twist, word: Word, samples: int) -> None:
    """s_w(pi(j_w(c))) = p^w(c) along the sampled loop."""
    for k in range(0, samples, max(1, samples // 16)):
        c = ClassRep(word, BasePoint(ZERO_ANGLE, Fraction(k, samples)), ZERO_ANGLE)
        g = twist.pi(TwistElement.of(c))
        if g.source_pt != c.base:
            raise ArithmeticError(f"pi does not identify E^{render_word(word)} with B^{render_word(word)}")


def obstruction_certificate(twist: FreeTwist, word: Word, samples: int = DEFAULT_WINDING_SAMPLES) -> int:
    """Chern number of E^w, which must vanish for a continuous section of pi over G^w."""
    if not twist.word_filter(word):
        raise NotInGrading(f"{render_word(word)} is outside the grading of {twist.name}")
    _check_identification(twist, word, samples)
    return winding_number(word_seam_loop(word, samples))


def chern_of_word(word: Word) -> int:
    """Closed form for the obstruction: the signed count of b."""
    return ell_b(word)


def _at_or_after(x: Angle, position: Angle) -> bool:
    """frac(x) >= frac(position), decided exactly."""
    a1, b1 = x.representative()
    a2, b2 = position.representative()
    return _sign_quadratic(a1 - a2, b1 - b2) >= 0


class WordSection:
    """A continuous section u -> B^w for a word of Chern number zero.

    In canonical coordinates the phase must jump by ``n_i * y`` across the
    seam of each letter bundle; the phase below accumulates exactly those
    jumps, and closes up around the x-circle because the n_i sum to zero.
    """

    def __init__(self, word: Word):
        if chern_of_word(word) != 0:
            raise ValueError(f"B^{render_word(word)} has nonzero Chern number and no global section")
        self.word = word
        self.seams = [s for s in word_seams(word) if s.chern]

    def phase(self, u: BasePoint) -> Angle:
        coeff = sum(s.chern for s in self.seams if _at_or_after(u.x, s.position))
        return Angle(coeff * u.y)

    def __call__(self, u: BasePoint) -> ClassRep:
        return ClassRep(self.word, u, self.phase(u))

    def continuity_defects(self, samples: int = 64) -> list[tuple]:
        """Exact mismatch at every seam and at the wrap x = 0, for sampled y.

        Crossing a breakpoint upward, the canonical phase of a continuous
        section must jump by the sum of the Chern numbers of the seams sitting
        there.  Returns the (breakpoint, y, mismatch) triples that fail.
        """
        breakpoints = {ZERO_ANGLE.representative(): ZERO_ANGLE}
        for s in self.seams:
            breakpoints.setdefault(s.position.representative(), s.position)
        defects = []
        for key, where in breakpoints.items():
            at_zero = key == ZERO_ANGLE.representative()
            for k in range(samples):
                y = Fraction(k, samples)
                required = sum(s.chern for s in self.seams if s.position.representative() == key) * y
                right = sum(s.chern for s in self.seams if _at_or_after(where, s.position))
                if at_zero:
                    left = sum(s.chern for s in self.seams)  # x -> 1 from below
                else:
                    left = sum(
                        s.chern for s in self.seams if _at_or_after(where, s.position) and s.position.representative() != key
                    )
                mismatch = Angle((right - left) * y - required)
                if not mismatch.is_zero:
                    defects.append((where, y, mismatch))
        return defects
