"""
Full-size seeded corpora checked against the exact matrix semantics.

Deselect with `pytest -m "not slow"`.
"""
import statistics
import time

import pytest

from scaledzx.core import isomorphic, tensor_all
from scaledzx.corpus import scalar_corpus, stabilizer_corpus, zero_corpus
from scaledzx.equality import decide_equal
from scaledzx.models.ZeroNF import ZeroNF
from scaledzx.patterns import pairs, star
from scaledzx.report import verify_rules
from scaledzx.rewrite import replay_derivation
from scaledzx.rules import closure_variants, rule_registry
from scaledzx.scalars import normalize_scalar_diagram, scalar_normal_form
from scaledzx.semantics import is_zero_matrix, scalar_value, semantically_equal
from scaledzx.zero import is_zero, zero_normal_form

pytestmark = pytest.mark.slow


def test_rule_sweep_with_three_legs():
    rules = closure_variants(rule_registry())
    start = time.perf_counter()
    reports = verify_rules(rules, legs=3, workers=4)
    elapsed = time.perf_counter() - start
    assert [r.rule_id for r in reports if not r.passed] == []
    assert elapsed < 60


def test_scalar_corpus(seed):
    forms = {}
    for d in scalar_corpus(1000, seed):
        form, derivation = normalize_scalar_diagram(d)
        value = scalar_value(d)
        assert type(form) is type(scalar_normal_form(value))
        assert form == scalar_normal_form(value)
        assert isomorphic(derivation.end, form.diagram())
        assert forms.setdefault(value, form) == form


def test_zero_corpus(seed):
    for d in zero_corpus(500, seed):
        assert is_zero_matrix(d)
        form, derivation = zero_normal_form(d)
        assert isinstance(form, ZeroNF)
        assert form == ZeroNF(len(d.inputs), len(d.outputs))
        assert replay_derivation(derivation) == derivation.end
        assert isomorphic(derivation.end, form.diagram())


def test_is_zero_agrees_with_matrices(seed):
    for d in stabilizer_corpus(300, seed):
        assert is_zero(d) == is_zero_matrix(d)


def test_decide_equal_agrees_with_matrices(seed):
    corpus = stabilizer_corpus(1000, seed)
    unit = tensor_all([star(), pairs(2)])
    cases = list(zip(corpus[::2], corpus[1::2]))
    cases += [(d, tensor_all([d, unit])) for d in corpus[::2]]
    assert len(cases) == 1000

    timings = []
    for left, right in cases:
        start = time.perf_counter()
        result = decide_equal(left, right)
        timings.append(time.perf_counter() - start)
        assert result.equal == semantically_equal(left, right)
    assert statistics.median(timings) < 0.1
