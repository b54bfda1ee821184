from scaledzx.equality import decide_equal
from scaledzx.models.RewriteRule import RewriteRule
from scaledzx.models.SoundnessReport import SoundnessReport
from scaledzx.patterns import identity, z_state
from scaledzx.report import (
    equality_report,
    matrix_payload,
    soundness_frame,
    soundness_report,
    verify_rules,
)
from scaledzx.rules import lookup, negative_controls
from scaledzx.semantics import interpret

REPORTS = [
    SoundnessReport("spider", 12, ()),
    SoundnessReport("lcomp", 4, (), derived=True),
    SoundnessReport("copy-unscaled", 6, ((1,),), negative_control=True),
    SoundnessReport("hopf", 3, ((2,),), derived=True),
]


def test_matrix_payload(bell_diagram):
    payload = matrix_payload(interpret(bell_diagram))
    assert payload.startswith("matrix 4x1 (exact")
    assert "approximate" not in payload

    approx = matrix_payload(interpret(bell_diagram), approx=True).splitlines()
    assert "approximate (not authoritative)" in approx
    assert approx[-1].startswith("[0.70710678118654")


def test_soundness_frame():
    df = soundness_frame(REPORTS)
    assert list(df["kind"]) == ["primitive", "derived", "negative control", "derived"]
    assert list(df["result"]) == ["pass", "pass", "FAIL", "FAIL"]
    assert list(df["expected"]) == ["yes", "yes", "yes", "no"]


def test_soundness_report_summary():
    text = soundness_report("verify-rules --legs 2", REPORTS).to_text()
    assert text.startswith("# verify-rules --legs 2\n")
    assert text.rstrip().endswith("rules 4, instances 25, unexpected 1")
    assert "| rule" in text


def test_equality_report_without_derivations():
    result = decide_equal(z_state(0), identity())
    text = equality_report("eq", ["a", "b"], result).to_text()
    assert text == "# eq\n# input sha256 a\n# input sha256 b\nequal false\n"


def test_verify_rules_keeps_rule_order():
    rules = [lookup("star"), lookup("loop")] + negative_controls()
    reports = verify_rules(rules, legs=2, workers=2)
    assert [r.rule_id for r in reports] == [rule.rule_id for rule in rules]
    assert all(r.as_expected for r in reports)


def test_verify_rules_with_repeated_ids():
    star_rule = lookup("star")
    control = negative_controls()[0]
    renamed = RewriteRule("star", control.description, control.lhs, control.rhs, control.instances)
    reports = verify_rules([star_rule, renamed, star_rule], legs=2, workers=3)
    assert [r.passed for r in reports] == [True, False, True]
