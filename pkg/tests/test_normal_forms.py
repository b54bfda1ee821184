import pytest

from scaledzx.core import compose, isomorphic, tensor, tensor_all, vertex_components
from scaledzx.corpus import scalar_corpus, stabilizer_corpus, zero_corpus, zero_scalars
from scaledzx.equality import decide_equal, normal_form
from scaledzx.errors import NonScalarError, NotZeroError
from scaledzx.gslc import gslc_normalize
from scaledzx.models.ExactScalar import ExactScalar
from scaledzx.models.Diagram import Diagram, DiagramBuilder
from scaledzx.models.GslcForm import GslcForm
from scaledzx.models.ScalarNF import ScalarNF
from scaledzx.models.VertexKind import VertexKind
from scaledzx.models.ZeroNF import ZeroNF
from scaledzx.patterns import (
    bell,
    chain,
    free_loop,
    hadamard_wire,
    identity,
    pair,
    pairs,
    star,
    x_effect,
    x_state,
    z_scalar,
    z_spider,
    z_state,
)
from scaledzx.rewrite import replay_derivation
from scaledzx.rules import lookup
from scaledzx.scalars import decompose_scalar, normalize_scalar_diagram, scalar_normal_form
from scaledzx.semantics import interpret, is_zero_matrix, scalar_value, semantically_equal
from scaledzx.simplify import is_piece
from scaledzx.zero import is_zero, zero_normal_form


def same_form(a, b) -> bool:
    return type(a) is type(b) and a == b


# scalars


def test_star_pair_pair_is_one(one):
    form, derivation = normalize_scalar_diagram(one)
    assert same_form(form, ScalarNF(0, 0))
    assert form.to_text() == "scalar r=0 s=0: 1"
    assert not derivation.end.vertices


def test_star_and_z_scalar_is_empty():
    form, _ = normalize_scalar_diagram(tensor(star(), z_scalar(0)))
    assert same_form(form, ScalarNF(0, 0))


def test_squared_pair_normal_form():
    form, derivation = normalize_scalar_diagram(pairs(2, 3, 3))
    # (2ω⁷)² = 4ω⁶
    assert same_form(form, ScalarNF(4, 6))
    assert isomorphic(derivation.end, form.diagram())


@pytest.mark.parametrize("alpha", range(4))
def test_z_scalar_forms(alpha):
    form, _ = normalize_scalar_diagram(z_scalar(alpha))
    assert same_form(form, scalar_normal_form(scalar_value(z_scalar(alpha))))
    assert isinstance(form, ZeroNF) == (alpha == 2)


def test_scalar_normal_form_is_injective():
    values = [ExactScalar(r, s) for r in range(-4, 5) for s in range(8)]
    forms = {scalar_normal_form(v) for v in values}
    assert len(forms) == len(values)
    assert same_form(scalar_normal_form(ExactScalar.zero()), ZeroNF(0, 0))


@pytest.mark.parametrize("s", range(8))
def test_phase_representatives(s):
    form = scalar_normal_form(ExactScalar(0, s))
    assert scalar_value(form.diagram()) == ExactScalar(0, s)


def test_decompose_scalar():
    d = tensor_all([free_loop(), pair(1, 1), compose(compose(z_state(0), hadamard_wire()), x_effect(1))])
    decomposed = decompose_scalar(d)
    assert scalar_value(decomposed) == scalar_value(d)
    for comp in vertex_components(decomposed):
        assert is_piece(decomposed, comp)


def test_normalize_scalar_needs_a_scalar():
    with pytest.raises(NonScalarError):
        normalize_scalar_diagram(z_state(0))


def test_scalar_corpus_matches_oracle(seed):
    for d in scalar_corpus(40, seed):
        form, derivation = normalize_scalar_diagram(d)
        assert same_form(form, scalar_normal_form(scalar_value(d)))
        assert isomorphic(derivation.end, form.diagram())
        assert replay_derivation(derivation) == derivation.end


# zero


def test_is_zero_examples(zero_pair):
    assert is_zero(zero_pair)
    assert not is_zero(tensor_all([]))
    assert is_zero(tensor(z_scalar(2), bell()))
    assert not is_zero(bell())


def test_zero_identity_wire():
    form, derivation = zero_normal_form(tensor(z_scalar(2), identity()))
    assert same_form(form, ZeroNF(1, 1))
    assert isomorphic(derivation.end, form.diagram())
    assert is_zero_matrix(form.diagram())


def test_zero_scalar_alone():
    form, _ = zero_normal_form(z_scalar(2))
    assert same_form(form, ZeroNF(0, 0))


def test_zero_state_with_hadamards_and_stars():
    d = tensor_all([bell(), star(), pair(3, 1)])
    d = compose(d, tensor(chain([VertexKind.hadamard()]), identity()))
    form, derivation = zero_normal_form(d)
    assert same_form(form, ZeroNF(0, 2))
    assert interpret(form.diagram()).shape == (4, 1)
    assert replay_derivation(derivation) == derivation.end


def test_zero_normal_form_refuses_non_zero():
    with pytest.raises(NotZeroError):
        zero_normal_form(bell())


def test_zero_corpus(seed):
    for d in zero_corpus(10, seed, max_boundary=2, max_vertices=6):
        assert is_zero(d)
        form, _ = zero_normal_form(d)
        assert same_form(form, ZeroNF(len(d.inputs), len(d.outputs)))


def test_is_zero_matches_oracle(seed):
    for d in stabilizer_corpus(15, seed, max_boundary=2, max_vertices=6):
        assert is_zero(d) == is_zero_matrix(d)


# GS-LC and equality


def test_gslc_of_z_state():
    form, derivation = gslc_normalize(z_state(0))
    assert isinstance(form, GslcForm)
    assert form.n_qubits == 1 and form.edges == ()
    assert semantically_equal(form.diagram(), z_state(0))
    assert replay_derivation(derivation) == derivation.end


def test_gslc_of_bell_state():
    form, derivation = gslc_normalize(bell())
    assert form.n_qubits == 2
    assert semantically_equal(form.diagram(), bell())
    assert semantically_equal(derivation.end, bell())


def test_gslc_phase_on_output_changes_only_local_clifford():
    form, _ = gslc_normalize(z_state(0))
    phased, _ = gslc_normalize(compose(z_state(0), z_spider(1, 1, 1)))
    assert phased.edges == form.edges
    assert phased.words != form.words


def test_gslc_of_a_map_reads_back_as_a_map():
    d = chain([VertexKind.z(1), VertexKind.hadamard(), VertexKind.x(3)])
    assert (len(d.inputs), len(d.outputs)) == (1, 1)
    form, _ = gslc_normalize(d)
    assert (form.n_inputs, form.n_outputs) == (1, 1)
    assert semantically_equal(form.diagram(), d)


def test_decide_equal_reflexive(bell_diagram):
    result = decide_equal(bell_diagram, bell_diagram)
    assert result.equal and bool(result)
    assert isomorphic(result.left.end, result.right.end)


def test_decide_equal_euler():
    rule = lookup("euler")
    assert decide_equal(rule.lhs(()), rule.rhs(())).equal


def test_decide_equal_z_and_x_states():
    result = decide_equal(z_state(0), x_state(0))
    assert not result.equal


def test_decide_equal_arity():
    result = decide_equal(z_state(0), identity())
    assert not result.equal and result.left is None


def test_decide_equal_zero_diagrams():
    a = tensor(z_scalar(2), identity())
    b = tensor(pair(1, 3), z_spider(1, 1, 1))
    result = decide_equal(a, b)
    assert result.equal
    assert same_form(result.form, ZeroNF(1, 1))


@pytest.mark.parametrize("zero", zero_scalars(), ids=["X(pi)", "Z(pi)", "pair(pi/2,-pi/2)", "pair(-pi/2,pi/2)"])
def test_normal_form_of_zero_scalars(zero):
    form, _ = normal_form(zero)
    assert same_form(form, ZeroNF(0, 0))


def test_equality_matches_oracle(seed):
    corpus = stabilizer_corpus(12, seed, max_boundary=2, max_vertices=6)
    for d in corpus:
        for other in (tensor(d, pairs(2, 1, 1)), compose(d, identity(len(d.outputs)))):
            assert decide_equal(d, other).equal == semantically_equal(d, other)
    for d1, d2 in zip(corpus, corpus[1:]):
        assert decide_equal(d1, d2).equal == semantically_equal(d1, d2)


def doubled_edge() -> Diagram:
    builder = DiagramBuilder()
    u = builder.add_vertex(VertexKind.z(0))
    v = builder.add_vertex(VertexKind.z(1))
    builder.add_edge(u, v)
    builder.add_edge(u, v)
    builder.add_edge(v, v)
    builder.add_edge(u, builder.add_output())
    builder.add_edge(v, builder.add_output())
    return builder.build()


def test_normal_forms_with_parallel_edges_and_self_loops():
    d = doubled_edge()
    assert is_zero(d) == is_zero_matrix(d)
    assert decide_equal(d, d).equal
    assert decide_equal(d, tensor_all([d, star(), pairs(2)])).equal
    other = tensor(z_state(0), z_state(1))
    form, derivation = zero_normal_form(tensor(z_scalar(2), d))
    assert same_form(form, ZeroNF(0, 2))
    assert replay_derivation(derivation) == derivation.end
    assert decide_equal(d, other).equal == semantically_equal(d, other)
