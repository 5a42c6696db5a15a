"""Letter bundles, the F2-action on the torus, and the spaces C^w and B^w.

Every letter bundle stores phases so that the circle acts by adding to the
stored phase.  The native conjugate actions of C^{a^-1} and C^{b^-1}
are recovered through :meth:`LetterBundle.to_native_phase`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..bundle import ClutchBundle, FiberPoint, pairing
from ..errors import ChainMismatch, WrongBundle
from ..exact_arith import (
    ZERO_ANGLE,
    Angle,
    BasePoint,
    rotate_x,
    angle_add,
    angle_neg,
    angle_sum,
    render_angle,
)
from ..freegroup import EPSILON, Word, invert, letter_inverse, render_word

NONTRIVIAL_CHERN = 1


@dataclass(frozen=True, slots=True)
class LetterBundle:
    letter: str  # "" for the identity
    bundle: ClutchBundle
    action_sign: int

    def to_native_phase(self, stored: Angle) -> Angle:
        """Phase in the letter's own coordinates, where a^-1 and b^-1 act by conjugation."""
        return stored if self.action_sign > 0 else angle_neg(stored)

    def from_native_phase(self, native: Angle) -> Angle:
        return self.to_native_phase(native)

    def native_act(self, z: Angle, native: Angle) -> Angle:
        """The letter's own T-action on native phases."""
        return angle_add(z, native) if self.action_sign > 0 else angle_add(angle_neg(z), native)


def _letter_bundles(chern: int) -> dict[str, LetterBundle]:
    trivial = ClutchBundle(0)
    return {
        "": LetterBundle("", trivial, 1),
        "a": LetterBundle("a", trivial, 1),
        "A": LetterBundle("A", trivial, -1),
        "b": LetterBundle("b", ClutchBundle(chern), 1),
        "B": LetterBundle("B", ClutchBundle(-chern), -1),
    }


LETTER_BUNDLES = _letter_bundles(NONTRIVIAL_CHERN)


def letter_bundle(letter: str) -> LetterBundle:
    return LETTER_BUNDLES[letter]


def alpha_letter(letter: str, p: BasePoint) -> BasePoint:
    if letter == "a":
        return rotate_x(p, 1)
    if letter == "A":
        return rotate_x(p, -1)
    return p


def alpha(word: Sequence[str], p: BasePoint) -> BasePoint:
    """alpha_w(p), with alpha_a the rotation by theta and alpha_b the identity.

    alpha_{uv} = alpha_u o alpha_v, so letters act right to left.
    """
    for letter in reversed(word):
        p = alpha_letter(letter, p)
    return p


def letter_bar(letter: str, c: FiberPoint) -> FiberPoint:
    """c -> c-bar from C^d to C^{d^-1}: base moves by alpha_d, stored phase negates."""
    target = letter_bundle(letter_inverse(letter)) if letter else letter_bundle("")
    return FiberPoint(target.bundle, alpha_letter(letter, c.base), angle_neg(c.phase))


@dataclass(frozen=True, slots=True)
class TupleElement:
    """A validated point of C^w; for the empty word, a single point of C^e = X x T."""

    word: Word
    entries: tuple[FiberPoint, ...]


def tuple_validate(word: Word, entries: Sequence[FiberPoint]) -> TupleElement:
    entries = tuple(entries)
    letters = tuple(word) if word else ("",)
    if len(entries) != len(letters):
        raise WrongBundle(len(entries), f"expected {len(letters)} entries for {render_word(word)}")
    for i, (letter, c) in enumerate(zip(letters, entries), start=1):
        if c.bundle != letter_bundle(letter).bundle:
            raise WrongBundle(i, f"{c.bundle} is not the bundle of {letter or 'e'}")
    for i in range(len(letters) - 1):
        expected = alpha_letter(letters[i + 1], entries[i + 1].base)
        if entries[i].base != expected:
            raise ChainMismatch(i + 1, f"{entries[i].base} != alpha({entries[i + 1].base}) = {expected}")
    return TupleElement(word, entries)


@dataclass(frozen=True, slots=True)
class ClassRep:
    """Canonical representative of a point of B^w.

    All circle coordinates are pushed into the last entry: the class is
    determined by ``p^w`` (the base of the last entry) and the total phase.
    """

    word: Word
    base: BasePoint
    total_phase: Angle

    def __str__(self) -> str:
        return render_class(self)


def render_class(c: ClassRep) -> str:
    return f"[{render_word(c.word)} | {render_angle(c.base.x)} ; {c.base.y} | {render_angle(c.total_phase)}]"


def canonicalize(t: TupleElement) -> ClassRep:
    return ClassRep(t.word, t.entries[-1].base, angle_sum(c.phase for c in t.entries))


def expand(c: ClassRep) -> TupleElement:
    """The canonical tuple of a class: zero phases except the last entry."""
    if not c.word:
        return TupleElement(c.word, (FiberPoint(letter_bundle("").bundle, c.base, c.total_phase),))
    entries = []
    p = c.base
    n = len(c.word)
    for i in range(n - 1, -1, -1):
        letter = c.word[i]
        phase = c.total_phase if i == n - 1 else ZERO_ANGLE
        entries.append(FiberPoint(letter_bundle(letter).bundle, p, phase))
        p = alpha_letter(letter, p)
    entries.reverse()
    return TupleElement(c.word, tuple(entries))


def act_on_tuple(t: TupleElement, phases: Sequence[Angle]) -> TupleElement:
    """Coordinatewise action of (z_1, ..., z_n); an element of K_n if the z_i sum to zero."""
    return TupleElement(
        t.word, tuple(FiberPoint(c.bundle, c.base, angle_add(z, c.phase)) for c, z in zip(t.entries, phases))
    )


def p_w(c: ClassRep) -> BasePoint:
    return c.base


def t_act_class(z: Angle, c: ClassRep) -> ClassRep:
    return ClassRep(c.word, c.base, angle_add(z, c.total_phase))


def class_pairing(c1: ClassRep, c2: ClassRep) -> Angle:
    """<c1, c2> in B^w as the sum of entrywise pairings."""
    t1, t2 = expand(c1), expand(c2)
    return angle_sum(pairing(x, y) for x, y in zip(t1.entries, t2.entries))


def bar(c: ClassRep) -> ClassRep:
    """[c_1, ..., c_n] -> [bar c_n, ..., bar c_1] in B^{w^-1}."""
    t = expand(c)
    if not c.word:
        (e,) = t.entries
        return canonicalize(tuple_validate(EPSILON, (letter_bar("", e),)))
    barred = [letter_bar(letter, entry) for letter, entry in zip(c.word, t.entries)]
    barred.reverse()
    return canonicalize(tuple_validate(invert(c.word), barred))


def unit_class(x: BasePoint, z: Angle = ZERO_ANGLE) -> ClassRep:
    return ClassRep(EPSILON, x, z)


def class_from_native(word: Word, base: BasePoint, native_phases: Sequence[Angle]) -> ClassRep:
    """Build a class from per-letter phases given in each letter's native coordinates."""
    t = expand(ClassRep(word, base, ZERO_ANGLE))
    letters = tuple(word) if word else ("",)
    stored = [letter_bundle(l).from_native_phase(z) for l, z in zip(letters, native_phases)]
    return canonicalize(act_on_tuple(t, stored))

