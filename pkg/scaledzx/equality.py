"""
Deciding equality of stabilizer diagrams by comparing normal forms.
"""
import logging
from typing import Optional, Tuple, Union

from scaledzx import zero
from scaledzx.gslc import gslc_normalize
from scaledzx.helpers.utils import zx_params
from scaledzx.models.Derivation import Derivation
from scaledzx.models.Diagram import Diagram
from scaledzx.models.EqualityResult import EqualityResult
from scaledzx.models.GslcForm import GslcForm
from scaledzx.models.ZeroNF import ZeroNF

logger = logging.getLogger(__name__)

NormalForm = Union[GslcForm, ZeroNF]


def normal_form(d: Diagram, max_states: Optional[int] = None) -> Tuple[NormalForm, Derivation]:
    """
    The ZeroNF of a zero diagram, otherwise its canonical GS-LC form.

    Args:
        d (Diagram): Any stabilizer diagram.
        max_states (int, optional): GS-LC search cap. Defaults to `gslc_max_states` from the
            `[zx]` config section.

    Returns:
        Tuple[NormalForm, Derivation]: The form and a derivation from `d` to its diagram.
    """
    if zero.is_zero(d):
        return zero.zero_normal_form(d)
    if max_states is None:
        max_states = int(zx_params()["gslc_max_states"])
    return gslc_normalize(d, max_states)


def decide_equal(d1: Diagram, d2: Diagram, max_states: Optional[int] = None) -> EqualityResult:
    """
    Decides whether two diagrams denote the same matrix.

    Diagrams of different arity are never equal and get no derivations. Otherwise both are brought
    to normal form; they are equal exactly when the forms coincide. The two derivations then end
    in isomorphic diagrams.
    """
    arity = (len(d1.inputs), len(d1.outputs))
    if arity != (len(d2.inputs), len(d2.outputs)):
        logger.info(f"arity {arity} differs from ({len(d2.inputs)}, {len(d2.outputs)})")
        return EqualityResult(False)
    left_form, left = normal_form(d1, max_states)
    right_form, right = normal_form(d2, max_states)
    equal = type(left_form) is type(right_form) and left_form == right_form
    logger.info(f"normal forms {'agree' if equal else 'differ'}")
    return EqualityResult(equal, left, right, left_form)
