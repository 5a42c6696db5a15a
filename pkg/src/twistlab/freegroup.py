"""Reduced words in the free group F2 = <a, b>.

Letters are single characters: ``a``, ``b`` and their inverses ``A``, ``B``.
The identity is the empty word, written ``e`` in text.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator

LETTERS = ("a", "A", "b", "B")
_INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}
_PRETTY = {"a": "a", "A": "a⁻¹", "b": "b", "B": "b⁻¹"}


def letter_inverse(letter: str) -> str:
    return _INVERSE[letter]


class Word(tuple):
    """A reduced word, stored as a tuple of letters.

    Structural equality is group equality because reduced forms are unique.
    Construct through :func:`reduce` or :func:`parse_word`; the constructor
    itself reduces too, so a ``Word`` is never unreduced.
    """

    __slots__ = ()

    def __new__(cls, letters: Iterable[str] = ()):
        return tuple.__new__(cls, _reduce_letters(letters))

    @classmethod
    def _trusted(cls, letters) -> Word:
        return tuple.__new__(cls, letters)

    def __repr__(self) -> str:
        return f"Word({render_word(self)!r})"

    def __str__(self) -> str:
        return render_word(self)

    def __mul__(self, other: Word) -> Word:
        return multiply(self, other)

    def __invert__(self) -> Word:
        return invert(self)

    @property
    def is_identity(self) -> bool:
        return len(self) == 0

    def pretty(self) -> str:
        return " ".join(_PRETTY[x] for x in self) or "ε"


def _reduce_letters(letters: Iterable[str]) -> list[str]:
    stack: list[str] = []
    for letter in letters:
        if letter not in _INVERSE:
            raise ValueError(f"not a letter of F2: {letter!r}")
        if stack and stack[-1] == _INVERSE[letter]:
            stack.pop()
        else:
            stack.append(letter)
    return stack


def reduce(letters: Iterable[str]) -> Word:
    """Free reduction by a single left-to-right stack pass."""
    return Word._trusted(_reduce_letters(letters))


EPSILON = Word._trusted(())
A = Word._trusted(("a",))
A_INV = Word._trusted(("A",))
B = Word._trusted(("b",))
B_INV = Word._trusted(("B",))


def multiply(u: Word, v: Word) -> Word:
    # only the seam between u and v can cancel
    k = 0
    n = min(len(u), len(v))
    while k < n and u[len(u) - 1 - k] == _INVERSE[v[k]]:
        k += 1
    return Word._trusted(u[: len(u) - k] + v[k:])


def invert(w: Word) -> Word:
    return Word._trusted(tuple(_INVERSE[x] for x in reversed(w)))


def ell_a(w: Word) -> int:
    """Signed count of ``a``; the homomorphism F2 -> Z with a -> 1, b -> 0."""
    return w.count("a") - w.count("A")


def ell_b(w: Word) -> int:
    return w.count("b") - w.count("B")


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("e", "ε", ""):
        return EPSILON
    return reduce(text)


def render_word(w: Word) -> str:
    return "".join(w) if w else "e"


def enumerate_words(max_length: int) -> Iterator[Word]:
    """All reduced words of length <= max_length, shortest first."""
    yield EPSILON
    frontier = [EPSILON]
    for _ in range(max_length):
        nxt = []
        for w in frontier:
            for letter in LETTERS:
                if w and w[-1] == _INVERSE[letter]:
                    continue
                nxt.append(Word._trusted(w + (letter,)))
        yield from nxt
        frontier = nxt


def words_of_length(n: int) -> list[Word]:
    return [Word._trusted(t) for t in product(LETTERS, repeat=n) if _is_reduced(t)]


def _is_reduced(letters) -> bool:
    return all(letters[i] != _INVERSE[letters[i + 1]] for i in range(len(letters) - 1))


def random_word(rng, max_length: int) -> Word:
    """A uniformly chosen length in [0, max_length], then uniform reduced letters."""
    n = rng.randrange(max_length + 1)
    letters: list[str] = []
    for _ in range(n):
        choices = [x for x in LETTERS if not letters or x != _INVERSE[letters[-1]]]
        letters.append(rng.choice(choices))
    return Word._trusted(tuple(letters))
