"""
SoundnessReport: outcome of sweeping one rule against the exact oracle.
"""
from typing import NamedTuple, Tuple


class SoundnessReport(NamedTuple):
    """
    Attributes:
        rule_id (str): The rule checked.
        instances (int): Number of instantiations evaluated.
        failures (Tuple[Tuple, ...]): Parameter tuples whose sides disagree.
        derived (bool): Whether the rule is flagged derived.
        negative_control (bool): Whether the rule is expected to fail.
    """

    rule_id: str
    instances: int
    failures: Tuple[Tuple, ...]
    derived: bool = False
    negative_control: bool = False

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def as_expected(self) -> bool:
        return self.passed != self.negative_control
