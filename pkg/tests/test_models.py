import pytest

from scaledzx.errors import ScalarDecompositionError
from scaledzx.models.Derivation import BACKWARD, FORWARD, DerivationStep, opposite
from scaledzx.models.Dyadic import Dyadic
from scaledzx.models.ExactScalar import ExactScalar
from scaledzx.models.MatchSite import MatchSite
from scaledzx.models.Phase import Phase
from scaledzx.models.Report import Report
from scaledzx.models.RingElement import HALF, I, INV_SQRT2, OMEGA, ONE, SQRT2, RingElement
from scaledzx.models.ScalarNF import ScalarNF
from scaledzx.models.VertexKind import VertexKind
from scaledzx.models.ZeroNF import ZeroNF


@pytest.mark.parametrize(
    "text, turns", [("0", 0), ("pi/2", 1), ("pi", 2), ("-pi/2", 3)]
)
def test_phase_parse(text, turns):
    phase = Phase.parse(text)
    assert phase.quarter_turns == turns
    assert phase.file_string() == text


@pytest.mark.parametrize("text", ["3pi/2", "pi/4", "", "PI"])
def test_phase_parse_rejects(text):
    with pytest.raises(ValueError):
        Phase.parse(text)


def test_phase_arithmetic():
    assert Phase(3) + Phase(2) == Phase(1)
    assert -Phase(1) == Phase(3)
    assert str(Phase(3)) == "−π/2"
    assert Phase(2).is_pauli and Phase(1).is_proper_clifford


def test_vertex_kind():
    assert VertexKind.z(1).colour_swapped() == VertexKind.x(1)
    assert VertexKind.x(1).negated() == VertexKind.x(3)
    assert VertexKind.from_label("Z3") == VertexKind.z(3)
    assert VertexKind.star().label() == "star"
    with pytest.raises(ValueError):
        VertexKind("H", 2)
    with pytest.raises(ValueError):
        VertexKind.from_label("Y1")


def test_dyadic_normalises():
    assert Dyadic(4, 2) == 1
    assert str(Dyadic(3, 2)) == "3/4"
    assert Dyadic(1, 1) + Dyadic(1, 1) == 1


def test_ring_identities():
    assert OMEGA ** 8 == ONE
    assert OMEGA * OMEGA == I
    assert SQRT2 * SQRT2 == RingElement((2, 0, 0, 0))
    assert SQRT2 * INV_SQRT2 == ONE
    assert HALF * 2 == ONE
    assert (OMEGA * 3).conjugate() * OMEGA == RingElement((3, 0, 0, 0))


def test_ring_text():
    assert str(RingElement()) == "0"
    assert str(HALF) == "1/2"
    assert str(INV_SQRT2) == "(1/2)ω - (1/2)ω³"
    assert str(RingElement((1, -1, 0, 2))) == "1 - ω + 2ω³"


def test_ring_approx():
    assert INV_SQRT2.approx(5).startswith("0.70711")


@pytest.mark.parametrize(
    "r, s, text", [(0, 0, "1"), (-2, 0, "1/2"), (-4, 0, "1/4"), (2, 2, "2ω²"), (1, 0, "ω - ω³")]
)
def test_exact_scalar_embed(r, s, text):
    assert str(ExactScalar(r, s).embed()) == text


@pytest.mark.parametrize("r, s", [(0, 0), (-3, 5), (7, 1), (-2, 4), (1, 7)])
def test_exact_scalar_decomposes_its_embedding(r, s):
    assert ExactScalar.from_ring(ExactScalar(r, s).embed()) == ExactScalar(r, s)


def test_exact_scalar_zero_and_errors():
    assert ExactScalar.from_ring(RingElement()).is_zero
    assert (ExactScalar.zero() * ExactScalar.one()).is_zero
    with pytest.raises(ScalarDecompositionError):
        ExactScalar.from_ring(RingElement((3, 0, 0, 0)))
    with pytest.raises(ValueError):
        ExactScalar(1, None)


def test_match_site_text():
    site = MatchSite((3, 4), (7,), ((2, 1), (5, 0)), 1, (2, [1, 0]))
    assert site.to_text() == "v=3,4;e=7;l=2:1,5:0;o=1;p=[2,[1,0]]"
    assert MatchSite.parse(site.to_text()) == MatchSite((3, 4), (7,), ((2, 1), (5, 0)), 1, (2, (1, 0)))
    assert MatchSite.parse(MatchSite().to_text()) == MatchSite()
    with pytest.raises(ValueError):
        MatchSite.parse("v=1;q=2;p=[]")


def test_derivation_step_text():
    step = DerivationStep("spider.dual", FORWARD, MatchSite((1, 2), (0,), (), 0, (1, 3)))
    assert DerivationStep.parse(step.to_text()) == step
    assert opposite(FORWARD) == BACKWARD
    with pytest.raises(ValueError):
        DerivationStep.parse("spider sideways v=;e=;l=;o=0;p=[]")


def test_scalar_nf_text():
    assert ScalarNF(0, 0).to_text() == "scalar r=0 s=0: 1"
    assert ScalarNF(-2, 0).to_text() == "scalar r=-2 s=0: star"
    assert ScalarNF.of(ExactScalar(3, 9)) == ScalarNF(3, 1)
    with pytest.raises(ValueError):
        ScalarNF.of(ExactScalar.zero())


def test_zero_nf():
    form = ZeroNF(1, 1)
    assert form.to_text() == "zero inputs=1 outputs=1"
    d = form.diagram()
    assert len(d.vertices) == 3 and len(d.inputs) == 1 and len(d.outputs) == 1


def test_report_text():
    report = Report("eq", ("ab", "cd"), "equal true\n", "")
    assert report.to_text() == "# eq\n# input sha256 ab\n# input sha256 cd\nequal true\n# derivation\n"
    assert Report("demo bb84", (), "x").to_text() == "# demo bb84\nx\n"
