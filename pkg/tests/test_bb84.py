import pytest

from scaledzx.bb84 import effect, measure, run_demo, scenarios
from scaledzx.models.ExactScalar import ExactScalar
from scaledzx.models.ScalarNF import ScalarNF
from scaledzx.models.ZeroNF import ZeroNF
from scaledzx.semantics import scalar_value

HALF = ExactScalar(-2, 0)
QUARTER = ExactScalar(-4, 0)


def test_scenarios():
    assert len(scenarios()) == 16
    assert len(scenarios([("Z", "Z")])) == 4


@pytest.mark.parametrize("basis", ["Z", "X"])
def test_matching_bases_agree(basis):
    same = measure((basis, 0), (basis, 0))
    assert same.value == HALF
    assert type(same.probability) is ScalarNF and same.probability == ScalarNF(-2, 0)
    assert scalar_value(same.probability.diagram()) == HALF

    different = measure((basis, 0), (basis, 1))
    assert different.value.is_zero
    assert type(different.probability) is ZeroNF


def test_mixed_bases_are_uniform():
    for result in run_demo([("Z", "X"), ("X", "Z")]):
        assert result.value == QUARTER
        assert type(result.probability) is ScalarNF and result.probability.value() == QUARTER


def test_labels():
    result = measure(("Z", 0), ("X", 1))
    assert result.label == "computational/hadamard <0-|"
    text = result.to_text()
    assert text.startswith(result.label)
    assert "value: 1/4" in text


def test_unknown_measurement():
    with pytest.raises(ValueError):
        effect("Y", 0)
