import pytest

from scaledzx.core import tensor_all
from scaledzx.errors import RuleError
from scaledzx.models.Derivation import BACKWARD, FORWARD
from scaledzx.patterns import pair
from scaledzx.rewrite import match_rule, verify_rule_soundness
from scaledzx.rules import (
    all_rule_ids,
    closure_variants,
    derived_rules,
    lookup,
    negative_controls,
    rule_registry,
)
from scaledzx.semantics import semantically_equal

PRIMITIVE_IDS = [
    "spider", "loop", "cup", "colour", "bialgebra", "copy", "pi-copy", "pi-comm", "euler",
    "hopf", "star", "zero", "zero-scalar",
]


def test_registry_ids():
    assert [rule.rule_id for rule in rule_registry()] == PRIMITIVE_IDS


def test_closure_variant_ids():
    ids = all_rule_ids()
    for suffix in ("", ".dual", ".flip", ".dual.flip"):
        assert f"spider{suffix}" in ids
    assert "lcomp.dual" not in ids
    assert len(closure_variants(rule_registry())) == 4 * len(PRIMITIVE_IDS)


def test_lookup_unknown():
    with pytest.raises(KeyError):
        lookup("no-such-rule")


def test_derived_flags():
    assert all(rule.derived for rule in derived_rules())
    assert lookup("hopf").derived
    assert not lookup("spider").derived


@pytest.mark.parametrize("rule", closure_variants(rule_registry()), ids=lambda r: r.rule_id)
def test_primitive_rules_are_sound(rule):
    report = verify_rule_soundness(rule, legs=2)
    assert report.instances > 0
    assert report.passed, report.failures


@pytest.mark.parametrize("rule", derived_rules(), ids=lambda r: r.rule_id)
def test_derived_rules_are_sound(rule):
    report = verify_rule_soundness(rule, legs=2)
    assert report.passed, report.failures


@pytest.mark.parametrize("rule", negative_controls(), ids=lambda r: r.rule_id)
def test_negative_controls_are_flagged(rule):
    report = verify_rule_soundness(rule, legs=2)
    assert not report.passed
    assert report.as_expected


def test_star_rule_has_one_instance():
    report = verify_rule_soundness(lookup("star"), legs=3)
    assert report.instances == 1 and report.passed


def test_unknown_direction():
    with pytest.raises(RuleError):
        match_rule(pair(), lookup("spider"), "sideways")


def test_lemma_rules_match_pieces():
    d = tensor_all([pair(3, 3), pair(1, 1)])
    sites = match_rule(d, lookup("scalar-pi-2-inverse"), FORWARD)
    assert len(sites) == 1
    assert match_rule(d, lookup("omega-squared"), FORWARD) == []
    rule = lookup("scalar-pi-2-inverse")
    assert semantically_equal(rule.lhs(()), rule.rhs(()))
    assert match_rule(rule.rhs(()), rule, BACKWARD)


def test_clifford_words_never_repeat_a_hadamard():
    words = list(lookup("clifford-word").instances(2))
    assert ("H", "H") not in words
    assert ("H",) in words and ("Z1", "H") in words
    for word in words:
        assert all(not (a == b == "H") for a, b in zip(word, word[1:]))
