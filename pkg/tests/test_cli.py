import json
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import angles, base_points, words
from twistlab.cli.evaluate import EvaluationError, eval_text
from twistlab.cli.expr import Action, Inverse, Literal, Product, parse, parse_angle, parse_element
from twistlab.cli.main import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from twistlab.cli.suites import run_suite
from twistlab.errors import ExpressionSyntaxError, NotComposable, UnknownSuite
from twistlab.exact_arith import Angle, base_point, render_angle
from twistlab.freegroup import parse_word
from twistlab.twistcore.elements import ClassRep, render_class

F = Fraction


# parsing


def test_parse_examples():
    node = parse("[b | 0 ; 1/3 | 1/4] * [B | 0 ; 1/3 | 0]")
    assert isinstance(node, Product)
    assert isinstance(node.left, Literal) and isinstance(node.right, Literal)
    assert node.left.cls == ClassRep(parse_word("b"), base_point(0, F(1, 3)), Angle(F(1, 4)))
    node = parse("([a | 0 ; 0 | 0])^-1")
    assert isinstance(node, Inverse) and isinstance(node.operand, Literal)
    node = parse("1/2 @ [e | 0 ; 0 | 0]")
    assert isinstance(node, Action) and node.angle == Angle(F(1, 2))


def test_parse_angles():
    assert parse_angle("1/3 + 2*theta") == Angle(F(1, 3), 2)
    assert parse_angle("-1/3 - theta") == Angle(F(-1, 3), -1)
    assert parse_angle("theta") == Angle(0, 1)
    assert parse_angle("3*theta") == Angle(0, 3)
    assert parse_angle("5/4") == Angle(F(1, 4))


def test_multiline_positions():
    with pytest.raises(ExpressionSyntaxError) as info:
        parse("[b | 0 ; 1/3 | 1/4]\n * [q | 0;0|0]")
    err = info.value
    assert (err.line, err.col) == (2, 5)
    assert err.expected == ["A", "B", "a", "b", "e"]
    assert err.found == "q"


@pytest.mark.parametrize(
    "text, col, expected",
    [
        ("[b | 0 ; 1/3 | 1/4] *", 22, ["'('", "'['"]),
        ("[b 0]", 4, ["'|'"]),
        ("[b | 0 ; 1/3 | 1/4] ]", 21, ["'*'", "'^'", "end of input"]),
    ],
)
def test_syntax_errors(text, col, expected):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse(text)
    assert (info.value.line, info.value.col) == (1, col)
    assert info.value.expected == expected


def test_bad_character():
    with pytest.raises(ExpressionSyntaxError) as info:
        parse("[b | 0 ; 1/3 | 1/4] % 2")
    assert info.value.col == 21


@given(words, base_points, angles)
def test_render_parse_round_trip(w, p, t):
    c = ClassRep(w, p, t)
    assert parse_element(render_class(c)) == c
    assert parse_angle(render_angle(t)) == t


# evaluation


def test_eval_b_times_b_inverse_letter():
    # literals carry the stored phase: the B entry enters with its own sign
    out = eval_text("[b | 0 ; 1/3 | 1/4] * [B | 0 ; 1/3 | 0]")
    assert str(out) == "[e | 0 ; 1/3 | 1/4]"


def test_eval_difference_of_phases_via_inverse():
    out = eval_text("[b | 0 ; 1/3 | 1/4] * ([b | 0 ; 1/3 | 1/3])^-1")
    assert str(out) == "[e | 0 ; 1/3 | 11/12]"


def test_eval_element_times_inverse_is_unit():
    text = "[bA | 1/5 + theta ; 2/7 | 1/9]"
    out = eval_text(f"{text} * ({text})^-1")
    c = parse_element(text)
    assert out.word == parse_word("e")
    assert out.base.y == c.base.y and out.cls.total_phase.is_zero


def test_eval_action_and_unit():
    assert str(eval_text("1/2 @ [e | 0 ; 0 | 0]")) == "[e | 0 ; 0 | 1/2]"
    assert str(eval_text("1/4 @ [b | 0 ; 0 | 1/4]")) == "[b | 0 ; 0 | 1/2]"


def test_eval_not_composable_names_both_points():
    with pytest.raises(EvaluationError) as info:
        eval_text("[a | 0 ; 0 | 0] * [a | 0 ; 0 | 0]")
    err = info.value
    assert isinstance(err.cause, NotComposable)
    assert err.cause.left == base_point(0, 0)
    assert err.cause.right == base_point(Angle(0, 1), 0)
    assert (err.line, err.col) == (1, 17)


# suites


def test_obstruction_suite_certificates():
    report = run_suite("obstruction", 1, 256)
    assert report.passed
    assert report.certificates["e"] == 0
    assert report.certificates["b"] == 1
    assert report.certificates["B"] == -1
    assert report.certificates["I^E:b"] == 1


@pytest.mark.parametrize(
    "name, samples",
    [("axioms", 200), ("twist", 200), ("isotropy", 3), ("kumjian", 200), ("cocycle", 200), ("minimality", 1000)],
)
def test_small_suites_pass(name, samples):
    report = run_suite(name, 42, samples)
    assert report.passed, report.failures[:3]
    assert report.cases > 0


def test_minimality_suite_reports_gap():
    report = run_suite("minimality", 0, 10_000)
    assert report.max_gap < 1e-3


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")


def test_reports_are_byte_stable():
    a = run_suite("twist", 7, 100).to_json(stable=True)
    b = run_suite("twist", 7, 100).to_json(stable=True)
    assert a == b
    data = json.loads(a)
    assert set(data) == {"suite", "seed", "samples", "failures", "certificates", "max_gap", "elapsed_ms"}
    assert data["elapsed_ms"] is None
    assert json.loads(run_suite("twist", 7, 100).to_json())["elapsed_ms"] >= 0


def test_all_merges_every_suite():
    report = run_suite("all", 3, 200)
    assert report.passed
    assert report.certificates["obstruction/b"] == 1
    assert report.certificates["kumjian/(0,1)"] == 1
    assert report.max_gap is not None
    with pytest.raises(ValueError):
        run_suite("all", 3, 50)


# command line


def test_main_exit_codes(capsys):
    assert main(["eval", "[b | 0 ; 1/3 | 1/4] * [B | 0 ; 1/3 | 0]"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "[e | 0 ; 1/3 | 1/4]"
    assert main(["eval", "[b | 0 ; 1/3 | 1/4] *"]) == EXIT_USAGE
    assert main(["eval", "[a | 0 ; 0 | 0] * [a | 0 ; 0 | 0]"]) == EXIT_FAIL
    assert main(["certify", "--word", "bab", "--samples", "256"]) == EXIT_OK
    assert "certificate 2" in capsys.readouterr().out
    assert main(["certify", "--word", "a", "--isotropy"]) == EXIT_USAGE
    assert main(["certify", "--word", "xyz"]) == EXIT_USAGE
    assert main(["orbit", "--iterations", "1000"]) == EXIT_OK
    assert main(["orbit", "--iterations", "1000", "--rotation", "1/7"]) == EXIT_FAIL
    assert main(["orbit", "--iterations", "10"]) == EXIT_USAGE
    assert main(["verify", "bogus"]) == EXIT_USAGE
    assert main([]) == EXIT_USAGE


def test_verify_writes_json(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["verify", "minimality", "--samples", "1000", "--json", str(out), "--stable"]) == EXIT_OK
    data = json.loads(out.read_text())
    assert data["suite"] == "minimality" and data["failures"] == [] and data["elapsed_ms"] is None
    capsys.readouterr()
    assert main(["verify", "minimality", "--samples", "1000", "--json", "-", "--stable"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == data
