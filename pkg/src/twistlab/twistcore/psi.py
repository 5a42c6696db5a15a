"""The product maps psi_{w,w'}: B^{w,w'} -> B^{ww'}.

The recursion cancels one letter pair at a time at the inner boundary of
``w`` and ``w'``.  Each step uses one of the base cases

* ``psi_{e,d}`` and ``psi_{d,e}``: the unit fibre acts on the other factor;
* ``psi_{d,d^-1}([c1, c2]) = (p(c2), <c1, bar c2>)``, landing in the unit fibre;
* ``psi_{d,e} = id`` (concatenation) when nothing cancels.

:func:`psi_oracle` computes the same map directly in canonical coordinates
(total phase is the plain sum, base is the right factor's base).  The two
share nothing beyond the data types; tests compare them.
"""

from __future__ import annotations

from ..bundle import FiberPoint, pairing
from ..errors import NotComposable
from ..exact_arith import angle_add
from ..freegroup import EPSILON, Word, letter_inverse, multiply
from .elements import (
    ClassRep,
    TupleElement,
    alpha,
    canonicalize,
    expand,
    letter_bar,
    t_act_class,
    tuple_validate,
)


def composable(c: ClassRep, c2: ClassRep) -> bool:
    """(c, c2) lies in C^{w,w'}: p^w(c) = alpha_{w'}(p^{w'}(c2))."""
    return c.base == alpha(c2.word, c2.base)


def check_composable(c: ClassRep, c2: ClassRep) -> None:
    if not composable(c, c2):
        raise NotComposable(c.base, alpha(c2.word, c2.base))


def psi_cancel_pair(letter: str, c1: FiberPoint, c2: FiberPoint) -> ClassRep:
    """psi_{d,d^-1} on [c1, c2] with c1 in C^d and c2 in C^{d^-1}."""
    partner = letter_bar(letter_inverse(letter), c2)  # back in C^d, over p(c1)
    return ClassRep(EPSILON, c2.base, pairing(c1, partner))


def psi(c: ClassRep, c2: ClassRep, *, check: bool = True) -> ClassRep:
    if check:
        check_composable(c, c2)
    if not c.word:
        return t_act_class(c.total_phase, c2)
    if not c2.word:
        return t_act_class(c2.total_phase, c)

    d, e = c.word[-1], c2.word[0]
    left, right = expand(c), expand(c2)
    if d != letter_inverse(e):
        joined = tuple_validate(multiply(c.word, c2.word), left.entries + right.entries)
        return canonicalize(joined)

    unit = psi_cancel_pair(d, left.entries[-1], right.entries[0])
    if len(c2.word) > 1:
        tail = canonicalize(TupleElement(Word._trusted(c2.word[1:]), right.entries[1:]))
        inner = psi(unit, tail, check=False)
    else:
        inner = unit
    if len(c.word) > 1:
        head = canonicalize(TupleElement(Word._trusted(c.word[:-1]), left.entries[:-1]))
        return psi(head, inner, check=False)
    return inner


def psi_oracle(c: ClassRep, c2: ClassRep) -> ClassRep:
    """Canonical-coordinate formula: phases add, base is the right factor's base."""
    check_composable(c, c2)
    return ClassRep(multiply(c.word, c2.word), c2.base, angle_add(c.total_phase, c2.total_phase))
