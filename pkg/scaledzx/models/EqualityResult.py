"""
EqualityResult: the outcome of deciding whether two diagrams are equal.
"""
from typing import NamedTuple, Optional, Union

from scaledzx.models.Derivation import Derivation
from scaledzx.models.GslcForm import GslcForm
from scaledzx.models.ZeroNF import ZeroNF


class EqualityResult(NamedTuple):
    """
    Attributes:
        equal (bool): Whether both diagrams denote the same matrix.
        left (Derivation, optional): From the first diagram to its normal form.
        right (Derivation, optional): From the second diagram to its normal form.
        form (GslcForm | ZeroNF, optional): The first diagram's normal form.
    """

    equal: bool
    left: Optional[Derivation] = None
    right: Optional[Derivation] = None
    form: Optional[Union[GslcForm, ZeroNF]] = None

    def __bool__(self) -> bool:
        return self.equal
