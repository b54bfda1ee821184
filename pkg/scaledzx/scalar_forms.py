"""
The canonical scalar diagrams: the eight phase representatives and the modulus forms built
from stars and pairs(0,0).
"""
from typing import Dict, List, Tuple

from scaledzx.core import tensor, tensor_all
from scaledzx.models.Diagram import Diagram
from scaledzx.models.ExactScalar import ExactScalar
from scaledzx.patterns import pair, pairs, stars, z_scalar

Q_PLUS = (1, 1)
Q_MINUS = (3, 3)

# s -> the pairs (alpha, beta) making up that phase's representative
PHASE_REPRESENTATIVES: Dict[int, Tuple[Tuple[int, int], ...]] = {
    0: (),
    1: (Q_PLUS,),
    2: ((1, 2),),
    3: ((1, 2), Q_PLUS),
    4: ((2, 2),),
    5: ((3, 2), Q_MINUS),
    6: ((3, 2),),
    7: (Q_MINUS,),
}

# modulus exponent r of each representative
REPRESENTATIVE_MODULUS = (0, 2, 1, 3, 1, 3, 1, 2)


def phase_representative(s: int) -> Diagram:
    """
    The representative diagram for e^(isπ/4).
    """
    return tensor_all([pair(a, b) for a, b in PHASE_REPRESENTATIVES[s % 8]])


def modulus_counts(r: int) -> Tuple[int, int]:
    """
    Returns (pairs(0,0), stars) representing √2^r.
    """
    if r >= 0:
        return r, 0
    if r % 2 == 0:
        return 0, -r // 2
    return 1, (1 - r) // 2


def modulus_form(r: int) -> Diagram:
    n_pairs, n_stars = modulus_counts(r)
    return tensor(pairs(n_pairs), stars(n_stars))


def nf_pieces(r: int, s: int) -> List[Tuple]:
    """
    The NF of √2^r e^(isπ/4) as a list of piece descriptors: ("pair", a, b) and ("star",).
    """
    s %= 8
    n_pairs, n_stars = modulus_counts(r - REPRESENTATIVE_MODULUS[s])
    pieces: List[Tuple] = [("pair", a, b) for a, b in PHASE_REPRESENTATIVES[s]]
    pieces += [("pair", 0, 0)] * n_pairs
    pieces += [("star",)] * n_stars
    return pieces


def nf_diagram(r: int, s: int) -> Diagram:
    """
    The canonical diagram of the non-zero scalar √2^r e^(isπ/4): representative then modulus.
    """
    s %= 8
    return tensor(phase_representative(s), modulus_form(r - REPRESENTATIVE_MODULUS[s]))


def scalar_diagram(value: ExactScalar) -> Diagram:
    """
    nf_diagram for non-zero values, the lone Z(π) scalar for Zero.
    """
    if value.is_zero:
        return z_scalar(2)
    return nf_diagram(value.r, value.s)
