from scaledzx.core import validate
from scaledzx.corpus import MAX_BOUNDARY, scalar_corpus, stabilizer_corpus, zero_corpus
from scaledzx.semantics import is_zero_matrix


def test_same_seed_same_corpus():
    assert scalar_corpus(10, 3) == scalar_corpus(10, 3)
    assert stabilizer_corpus(10, 3) == stabilizer_corpus(10, 3)


def test_scalar_corpus(seed):
    for d in scalar_corpus(20, seed):
        assert d.is_scalar
        assert validate(d) == []


def test_stabilizer_corpus_bounds(seed):
    for d in stabilizer_corpus(20, seed):
        assert validate(d) == []
        assert len(d.inputs) <= MAX_BOUNDARY and len(d.outputs) <= MAX_BOUNDARY


def test_zero_corpus(seed):
    for d in zero_corpus(10, seed, max_boundary=2, max_vertices=5):
        assert is_zero_matrix(d)
