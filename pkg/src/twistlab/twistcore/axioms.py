"""Sampled checks of the groupoid and twist axioms.

A *twist object* is anything with the methods used here: ``multiply``,
``invert``, ``range``, ``source``, ``t_act``, ``iota``, ``iota_preimage``,
``pi``, ``unit_point``, the ``g_*`` operations on the quotient groupoid,
``g_is_unit``, and the samplers ``random_composable(rng, k)``.  Every check
compares with ``==``; there is no tolerance anywhere.

Each checker returns a list of failure records
``{"case", "witness", "expected", "got"}``; empty means pass.
"""

from __future__ import annotations

from ..exact_arith import ZERO_ANGLE, angle_add
from .. import sampling


def _failure(case: str, witness, expected, got) -> dict:
    return {
        "case": case,
        "witness": [str(w) for w in witness],
        "expected": str(expected),
        "got": str(got),
    }


def check_groupoid_axioms(twist, rng, samples: int) -> list[dict]:
    """Associativity, units and inverses on ``samples`` random composable triples."""
    failures = []
    mul, inv = twist.multiply, twist.invert
    for _ in range(samples):
        e1, e2, e3 = twist.random_composable(rng, 3)
        left = mul(mul(e1, e2), e3)
        right = mul(e1, mul(e2, e3))
        if left != right:
            failures.append(_failure("associativity", (e1, e2, e3), left, right))
        r, s = twist.range(e1), twist.source(e1)
        if mul(r, e1) != e1:
            failures.append(_failure("left unit", (e1,), e1, mul(r, e1)))
        if mul(e1, s) != e1:
            failures.append(_failure("right unit", (e1,), e1, mul(e1, s)))
        i1 = inv(e1)
        if mul(e1, i1) != r:
            failures.append(_failure("e e^-1 = r(e)", (e1,), r, mul(e1, i1)))
        if mul(i1, e1) != s:
            failures.append(_failure("e^-1 e = s(e)", (e1,), s, mul(i1, e1)))
        if inv(i1) != e1:
            failures.append(_failure("inverse involution", (e1,), e1, inv(i1)))
        if twist.range(i1) != s:
            failures.append(_failure("r(e^-1) = s(e)", (e1,), s, twist.range(i1)))
        e12 = mul(e1, e2)
        if twist.range(e12) != r or twist.source(e12) != twist.source(e2):
            failures.append(_failure("r, s of a product", (e1, e2), (r, twist.source(e2)), e12))
    return failures


def check_centrality(twist, rng, samples: int) -> list[dict]:
    """iota(r(e), z) e = e iota(s(e), z)."""
    failures = []
    for _ in range(samples):
        (e,) = twist.random_composable(rng, 1)
        z = sampling.random_angle(rng)
        x_r = twist.unit_point(twist.pi(twist.range(e)))
        x_s = twist.unit_point(twist.pi(twist.source(e)))
        left = twist.multiply(twist.iota(x_r, z), e)
        right = twist.multiply(e, twist.iota(x_s, z))
        if left != right:
            failures.append(_failure("centrality", (e, z), left, right))
    return failures


def check_twist_axioms(twist, rng, samples: int) -> list[dict]:
    """Centrality, pi a homomorphism, iota a homomorphism onto pi^-1(G^0), the T-action."""
    failures = check_centrality(twist, rng, samples)
    for _ in range(samples):
        e1, e2 = twist.random_composable(rng, 2)
        z, z2 = sampling.random_angle(rng), sampling.random_angle(rng)

        g12 = twist.g_multiply(twist.pi(e1), twist.pi(e2))
        if twist.pi(twist.multiply(e1, e2)) != g12:
            failures.append(_failure("pi(e1 e2) = pi(e1) pi(e2)", (e1, e2), g12, twist.pi(twist.multiply(e1, e2))))
        if twist.pi(twist.invert(e1)) != twist.g_invert(twist.pi(e1)):
            failures.append(_failure("pi(e^-1) = pi(e)^-1", (e1,), twist.g_invert(twist.pi(e1)), twist.pi(twist.invert(e1))))

        ze = twist.t_act(z, e1)
        if twist.pi(ze) != twist.pi(e1):
            failures.append(_failure("pi(z.e) = pi(e)", (z, e1), twist.pi(e1), twist.pi(ze)))
        if (ze == e1) != (z == ZERO_ANGLE):
            failures.append(_failure("free T-action", (z, e1), z == ZERO_ANGLE, ze == e1))
        x_r = twist.unit_point(twist.pi(twist.range(e1)))
        if ze != twist.multiply(twist.iota(x_r, z), e1):
            failures.append(_failure("z.e = iota(r(e), z) e", (z, e1), ze, twist.multiply(twist.iota(x_r, z), e1)))

        x = twist.unit_point(twist.pi(twist.source(e1)))
        a, b = twist.iota(x, z), twist.iota(x, z2)
        if twist.multiply(a, b) != twist.iota(x, angle_add(z, z2)):
            failures.append(_failure("iota homomorphism", (x, z, z2), twist.iota(x, angle_add(z, z2)), twist.multiply(a, b)))
        unit_g = twist.pi(a)
        if not twist.g_is_unit(unit_g) or twist.unit_point(unit_g) != x:
            failures.append(_failure("pi(iota(x, z)) = x", (x, z), x, unit_g))

        # iota is onto pi^-1(G^0), injective, and inverted by iota_preimage
        is_unit = twist.g_is_unit(twist.pi(e1))
        pre = twist.iota_preimage(e1)
        if is_unit != (pre is not None):
            failures.append(_failure("iota onto pi^-1(G^0)", (e1,), is_unit, pre is not None))
        elif pre is not None and twist.iota(*pre) != e1:
            failures.append(_failure("iota(iota^-1(e)) = e", (e1,), e1, twist.iota(*pre)))
        if (twist.iota(x, z) == twist.iota(x, z2)) != (z == z2):
            failures.append(_failure("iota injective", (x, z, z2), z == z2, not z == z2))
    return failures
