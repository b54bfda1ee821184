"""
ExactMatrix class: 2^m × 2^n matrices over Z[1/2][ω].
"""
from __future__ import annotations

from typing import List

import numpy as np

from scaledzx.models.RingElement import ONE, ZERO, RingElement


class ExactMatrix:
    """
    An exact matrix indexed by (outputs; inputs), first wire as most significant bit.

    Attributes:
        entries (np.ndarray): Object array of RingElement, shape (2^m, 2^n).
        n_outputs (int): m.
        n_inputs (int): n.
    """

    def __init__(self, entries: np.ndarray, n_outputs: int, n_inputs: int) -> None:
        entries = np.asarray(entries, dtype=object).reshape(2**n_outputs, 2**n_inputs)
        self.entries = entries
        self.n_outputs = n_outputs
        self.n_inputs = n_inputs

    @classmethod
    def scalar(cls, value: RingElement) -> ExactMatrix:
        entries = np.empty((1, 1), dtype=object)
        entries[0, 0] = value
        return cls(entries, 0, 0)

    @classmethod
    def zeros(cls, n_outputs: int, n_inputs: int) -> ExactMatrix:
        entries = np.full((2**n_outputs, 2**n_inputs), ZERO, dtype=object)
        return cls(entries, n_outputs, n_inputs)

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        entries = np.full((2**n, 2**n), ZERO, dtype=object)
        for i in range(2**n):
            entries[i, i] = ONE
        return cls(entries, n, n)

    @property
    def shape(self):
        return self.entries.shape

    def is_zero(self) -> bool:
        return all(entry.is_zero() for entry in self.entries.flat)

    def scaled(self, factor: RingElement) -> ExactMatrix:
        out = np.empty(self.entries.shape, dtype=object)
        for idx, entry in np.ndenumerate(self.entries):
            out[idx] = entry * factor
        return ExactMatrix(out, self.n_outputs, self.n_inputs)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.n_inputs != other.n_outputs:
            raise ValueError("Matrix dimensions do not agree")
        return ExactMatrix(np.dot(self.entries, other.entries), self.n_outputs, other.n_inputs)

    def kron(self, other: ExactMatrix) -> ExactMatrix:
        return ExactMatrix(
            np.kron(self.entries, other.entries),
            self.n_outputs + other.n_outputs,
            self.n_inputs + other.n_inputs,
        )

    def conjugate_transpose(self) -> ExactMatrix:
        out = np.empty((self.entries.shape[1], self.entries.shape[0]), dtype=object)
        for (i, j), entry in np.ndenumerate(self.entries):
            out[j, i] = entry.conjugate()
        return ExactMatrix(out, self.n_inputs, self.n_outputs)

    def rows(self) -> List[List[RingElement]]:
        return [list(row) for row in self.entries]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.entries.shape != other.entries.shape:
            return False
        return all(a == b for a, b in zip(self.entries.flat, other.entries.flat))

    def __hash__(self) -> int:
        return hash((self.n_outputs, self.n_inputs, tuple(self.entries.flat)))

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)

    def __repr__(self) -> str:
        return self.__str__()
