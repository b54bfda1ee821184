import pytest

from scaledzx.core import isomorphic
from scaledzx.derivations import established_rule, fixture, fixture_names, replay_fixture
from scaledzx.errors import DerivationError
from scaledzx.models.Derivation import Derivation
from scaledzx.rules import rule_registry
from scaledzx.rules.lemmas import LEMMA_RULES
from scaledzx.semantics import semantically_equal

PRIMITIVE_ONLY = [
    "halfscalar_innerprodgr2",
    "innerprod_wlog",
    "pi_multiplication",
    "overlap_with_ket_zero",
    "unique_zero_x",
]


def test_fixture_names():
    names = fixture_names()
    assert len(names) == len(set(names)) == 15
    assert {"unique_zero_x", "unique_zero_plus", "unique_zero_minus"} <= set(names)


@pytest.mark.parametrize("name", fixture_names())
def test_fixture_reaches_target(name):
    fx = fixture(name)
    assert isomorphic(fx.derivation.end, fx.target)
    assert semantically_equal(fx.start, fx.target)


@pytest.mark.parametrize("name", fixture_names())
def test_fixture_replays_from_text(name):
    fx = fixture(name)
    text = fx.to_text()
    assert text.startswith(f"# {name}: ")
    assert isomorphic(replay_fixture(fx), fx.target)
    assert len(Derivation.parse_steps(text)) == len(fx.derivation)


@pytest.mark.parametrize("name", PRIMITIVE_ONLY)
def test_primitive_fixtures_use_primitive_rules(name):
    base_ids = {"spider", "loop", "cup", "colour", "copy", "pi-comm", "hopf", "star"}
    for step in fixture(name).derivation.steps:
        assert step.rule_id.split(".")[0] in base_ids


def test_star_pair_pair_ends_empty():
    fx = fixture("halfscalar_innerprodgr2")
    assert not fx.derivation.end.vertices and fx.derivation.end.loops == 0


def test_unknown_fixture():
    with pytest.raises(KeyError):
        fixture("no_such_fixture")


def test_tampered_text_fails_to_replay():
    fx = fixture("innerprod_wlog")
    text = fx.to_text().replace("colour backward", "colour forward", 1)
    with pytest.raises(DerivationError):
        replay_fixture(fx, text)


def test_fixtures_build_only_on_earlier_lemmas():
    allowed = {rule.rule_id for rule in rule_registry()}
    for name in fixture_names():
        own = established_rule(name)
        for step in fixture(name).derivation.steps:
            base = step.rule_id.split(".")[0]
            assert base != own, f"{name} rewrites with its own lemma"
            assert base in allowed, f"{name} uses {base} before it is derived"
        if own is not None:
            allowed.add(own)


def test_every_lemma_rule_has_a_fixture():
    established = {established_rule(name) for name in fixture_names()} - {None}
    assert established == {rule.rule_id for rule in LEMMA_RULES}


@pytest.mark.parametrize(
    "name", ["y_states", "scalar_pi_2_equality", "omega_dagger_squared", "omega_squared", "minus_omega"]
)
def test_lemma_fixtures_take_several_steps(name):
    assert len(fixture(name).derivation) > 2
