"""Verification suites and their JSON reports.

Every suite is deterministic given ``(seed, samples)``: all randomness comes
from one ``random.Random(seed)`` consumed in a fixed order.
"""

from __future__ import annotations

import json
import time
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Callable, Optional

from .. import kumjian, sampling
from ..errors import UnknownSuite
from ..freegroup import enumerate_words, ell_a, parse_word, render_word
from ..twistcore.axioms import check_groupoid_axioms, check_twist_axioms
from ..twistcore.cocycle import (
    bicharacter_cocycle,
    build_cocycle_twist,
    check_cocycle_identity,
    cocycle_from_section,
    zero_cocycle,
)
from ..twistcore.dynamics import distinct_gap_lengths, minimality_report
from ..twistcore.elements import ClassRep, alpha
from ..twistcore.groupoid import (
    FreeTwist,
    closure_witness,
    g_element,
    in_ker_ell_a,
    is_isotropic,
    isotropy_twist,
)
from ..twistcore.obstruction import chern_of_word, obstruction_certificate
from ..twistcore.psi import psi, psi_oracle


@dataclass
class Report:
    suite: str
    seed: int
    samples: int
    cases: int = 0
    failures: list = field(default_factory=list)
    certificates: dict = field(default_factory=dict)
    max_gap: Optional[float] = None
    elapsed_ms: Optional[float] = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, stable: bool = False) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "samples": self.samples,
            "failures": self.failures,
            "certificates": self.certificates,
            "max_gap": self.max_gap,
            "elapsed_ms": None if stable else self.elapsed_ms,
        }

    def to_json(self, stable: bool = False) -> str:
        return json.dumps(self.to_dict(stable), indent=2) + "\n"


def _fail(case: str, witness, expected, got) -> dict:
    return {"case": case, "witness": [str(w) for w in witness], "expected": str(expected), "got": str(got)}


def suite_axioms(rng, samples: int) -> Report:
    """Groupoid laws on random composable triples, and psi against its oracle."""
    report = Report("axioms", 0, samples)
    twist = FreeTwist(max_word_length=4)
    report.failures += check_groupoid_axioms(twist, rng, samples)
    report.cases += samples

    per_pattern = max(1, samples // 100)
    words = list(enumerate_words(3))
    for w in words:
        for w2 in words:
            for _ in range(per_pattern):
                c2 = ClassRep(w2, sampling.random_base_point(rng), sampling.random_angle(rng))
                c = ClassRep(w, alpha(c2.word, c2.base), sampling.random_angle(rng))
                got, want = psi(c, c2), psi_oracle(c, c2)
                report.cases += 1
                if got != want:
                    report.failures.append(_fail("psi = oracle", (c, c2), want, got))
    return report


def suite_twist(rng, samples: int) -> Report:
    """Twist axioms for E and for the restriction I^E."""
    report = Report("twist", 0, samples)
    report.failures += check_twist_axioms(FreeTwist(), rng, samples)
    iso = isotropy_twist()
    report.failures += [dict(f, case="I^E: " + f["case"]) for f in check_twist_axioms(iso, rng, max(1, samples // 10))]
    report.cases = samples + max(1, samples // 10)
    return report


def suite_isotropy(rng, samples: int, max_length: int = 6) -> Report:
    """r(g) = s(g) exactly when ell_a(w) = 0, for every reduced word up to ``max_length``."""
    report = Report("isotropy", 0, samples)
    for w in enumerate_words(max_length):
        expected = ell_a(w) == 0
        for _ in range(samples):
            g = g_element(w, sampling.random_base_point(rng))
            report.cases += 1
            if is_isotropic(g) != expected:
                report.failures.append(_fail("r = s iff ell_a = 0", (g,), expected, is_isotropic(g)))
    witness = closure_witness(in_ker_ell_a, max_length=4)
    if witness is not None:
        report.failures.append(_fail("ker ell_a closed", witness, "closed", "not closed"))
    return report


def suite_obstruction(rng, samples: int, max_length: int = 4) -> Report:
    """Winding certificates of every E^w, |w| <= max_length, against the closed form ell_b."""
    report = Report("obstruction", 0, samples)
    twist = FreeTwist()
    for w in enumerate_words(max_length):
        cert = obstruction_certificate(twist, w, samples)
        report.certificates[render_word(w)] = cert
        report.cases += 1
        if cert != chern_of_word(w):
            report.failures.append(_fail("certificate = ell_b", (render_word(w),), chern_of_word(w), cert))
    iso = isotropy_twist()
    b = parse_word("b")
    cert_b = obstruction_certificate(iso, b, samples)
    report.certificates["I^E:b"] = cert_b
    if cert_b == 0:
        report.failures.append(_fail("I^E has no continuous section", ("b",), "nonzero", cert_b))
    return report


def suite_kumjian(rng, samples: int) -> Report:
    report = Report("kumjian", 0, samples)
    twist = kumjian.KumjianTwist()
    report.failures += check_groupoid_axioms(twist, rng, samples)
    report.failures += check_twist_axioms(twist, rng, samples)
    eff = kumjian.k_effectiveness_check(rng, max(1, samples // 10))
    report.cases = 2 * samples + max(1, samples // 10)
    for arrow in kumjian.ARROWS:
        report.certificates[f"({arrow[0]},{arrow[1]})"] = kumjian.component_certificate(arrow)
    report.certificates["Iso"] = eff.iso_certificate
    if eff.non_unit_isotropy:
        report.failures.append(_fail("Iso(G) = G^0", eff.non_unit_isotropy, "()", eff.non_unit_isotropy))
    if eff.iso_certificate != 0:
        report.failures.append(_fail("twist over Iso(G) trivial", (), 0, eff.iso_certificate))
    if eff.full_certificate == 0:
        report.failures.append(_fail("full twist nontrivial", ("(0,1)",), "nonzero", eff.full_certificate))
    for defect in eff.section_defects:
        report.failures.append(_fail("zero section is multiplicative", defect[:2], "0", defect[2]))
    return report


def suite_cocycle(rng, samples: int) -> Report:
    """E_sigma for the zero and a bicharacter cocycle: identity, axioms, recovery from the section."""
    report = Report("cocycle", 0, samples)
    grading = FreeTwist()
    recover = max(1, samples // 10)
    for sigma in (zero_cocycle(), bicharacter_cocycle()):
        triples = [grading.random_composable_g(rng, 3) for _ in range(samples)]
        report.failures += [dict(f, case=f"{sigma.name}: " + f["case"]) for f in check_cocycle_identity(sigma, triples)]
        twist = build_cocycle_twist(sigma, rng, samples=0, grading=grading)
        tag = f"{sigma.name}: "
        report.failures += [dict(f, case=tag + f["case"]) for f in check_groupoid_axioms(twist, rng, recover)]
        report.failures += [dict(f, case=tag + f["case"]) for f in check_twist_axioms(twist, rng, recover)]
        recovered = cocycle_from_section(twist, twist.canonical_section, rng, samples=recover)
        for _ in range(recover):
            g1, g2 = grading.random_composable_g(rng, 2)
            if recovered(g1, g2) != sigma(g1, g2):
                report.failures.append(_fail(tag + "sigma recovered", (g1, g2), sigma(g1, g2), recovered(g1, g2)))
        report.cases += samples + 3 * recover
    return report


def suite_minimality(rng, samples: int) -> Report:
    """Largest orbit gap of the golden rotation below 10/N; a rational rotation must fail."""
    report = Report("minimality", 0, samples)
    result = minimality_report(samples)
    report.max_gap = result.max_gap
    report.cases = 3
    if not result.passed:
        report.failures.append(_fail("max gap < 10/N", (samples,), f"< {result.bound}", result.max_gap))
    gaps = distinct_gap_lengths(samples)
    if len(gaps) > 3:
        report.failures.append(_fail("three distances", (samples,), "<= 3", len(gaps)))
    fault = minimality_report(samples, rotation=Fraction(1, 3))
    if fault.passed:
        report.failures.append(_fail("rational rotation detected", ("1/3",), "bound fails", fault.max_gap))
    return report


SUITES: dict[str, Callable] = {
    "axioms": suite_axioms,
    "twist": suite_twist,
    "isotropy": suite_isotropy,
    "obstruction": suite_obstruction,
    "kumjian": suite_kumjian,
    "cocycle": suite_cocycle,
    "minimality": suite_minimality,
}

DEFAULT_SAMPLES = {
    "axioms": 10_000,
    "twist": 10_000,
    "isotropy": 100,
    "obstruction": 1024,
    "kumjian": 10_000,
    "cocycle": 10_000,
    "minimality": 100_000,
}


def run_suite(name: str, seed: int = 0, samples: Optional[int] = None) -> Report:
    """Run one suite, or every suite in order for ``all``.

    ``samples`` defaults per suite; its meaning is suite-specific (triples,
    base points per word, winding samples, orbit length).
    """
    if name == "all":
        return _run_all(seed, samples)
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join([*SUITES, 'all'])}")
    n = DEFAULT_SAMPLES[name] if samples is None else samples
    start = time.perf_counter()
    report = SUITES[name](sampling.make_rng(seed), n)
    report.seed = seed
    report.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
    return report


def _run_all(seed: int, samples: Optional[int]) -> Report:
    total = Report("all", seed, samples if samples is not None else 0)
    start = time.perf_counter()
    for name in SUITES:
        sub = run_suite(name, seed, samples)
        total.cases += sub.cases
        total.failures += [dict(f, case=f"{name}/{f['case']}") for f in sub.failures]
        total.certificates.update({f"{name}/{k}": v for k, v in sub.certificates.items()})
        if sub.max_gap is not None:
            total.max_gap = sub.max_gap
    total.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
    return total
