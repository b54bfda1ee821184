"""
The single-qubit Clifford group, as words of two-legged nodes read from the input side, with one
canonical word for each of its 24 classes up to global phase. Canonical words use only Z and X
quarter turns, so a canonical chain never starts with a Hadamard.
"""
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from scaledzx.models.ExactMatrix import ExactMatrix
from scaledzx.models.ExactScalar import ExactScalar
from scaledzx.models.RingElement import RingElement
from scaledzx.models.VertexKind import VertexKind
from scaledzx.patterns import chain
from scaledzx.semantics import interpret

GENERATORS = ("Z1", "Z2", "Z3", "X1", "X2", "X3")
CLASS_COUNT = 24

Word = Tuple[str, ...]
PhaseKey = Tuple[RingElement, ...]


def word_kinds(word: Sequence[str]) -> List[VertexKind]:
    return [VertexKind.from_label(label) for label in word]


@lru_cache(maxsize=4096)
def word_matrix(word: Word) -> ExactMatrix:
    """
    The 2×2 matrix of the chain, input side first.
    """
    return interpret(chain(word_kinds(word)))


def _phase_key(matrix: ExactMatrix) -> PhaseKey:
    entries = list(matrix.entries.flat)
    lead = next(entry for entry in entries if not entry.is_zero())
    unit = RingElement.omega_power(-ExactScalar.from_ring(lead).s)
    return tuple(entry * unit for entry in entries)


@lru_cache(maxsize=1)
def canonical_words() -> Tuple[Word, ...]:
    """
    Breadth-first over words in generator order; the first word reaching a class is canonical.
    """
    words: List[Word] = []
    seen = set()
    frontier: List[Word] = [()]
    while frontier and len(words) < CLASS_COUNT:
        next_frontier: List[Word] = []
        for word in frontier:
            key = _phase_key(word_matrix(word))
            if key in seen:
                continue
            seen.add(key)
            words.append(word)
            next_frontier.extend(word + (g,) for g in GENERATORS)
        frontier = next_frontier
    return tuple(words)


@lru_cache(maxsize=1)
def _class_index() -> Dict[PhaseKey, int]:
    return {_phase_key(word_matrix(word)): i for i, word in enumerate(canonical_words())}


def canonical_word(index: int) -> Word:
    return canonical_words()[index]


@lru_cache(maxsize=4096)
def classify(word: Word) -> Tuple[int, int]:
    """
    Returns (class index, s) such that the word's matrix is e^(isπ/4) times the canonical one.

    Raises:
        ValueError: If the word is not a Clifford word.
    """
    matrix = word_matrix(tuple(word))
    index = _class_index().get(_phase_key(matrix))
    if index is None:
        raise ValueError(f"{word} is not a single-qubit Clifford word")
    canonical = word_matrix(canonical_word(index))
    for s in range(8):
        if canonical.scaled(RingElement.omega_power(s)) == matrix:
            return index, s
    raise ValueError(f"{word} differs from its canonical word by a non-unit")


def extend(index: int, word: Sequence[str]) -> Tuple[int, int]:
    """
    The class of canonical word `index` followed by `word` on the output side, with its phase.
    """
    return classify(canonical_word(index) + tuple(word))


def prepend(index: int, word: Sequence[str]) -> Tuple[int, int]:
    """
    The class of `word` followed by canonical word `index`.
    """
    return classify(tuple(word) + canonical_word(index))
