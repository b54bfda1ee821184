"""
Exceptions raised by the ScaledZX package.
"""
from typing import List, Optional


class ZXError(Exception):
    """Base class for every ScaledZX error."""


class BoundaryMismatchError(ZXError):
    """Raised when composing diagrams whose boundaries do not line up."""


class InvalidDiagramError(ZXError):
    """
    Raised when a diagram fails validation.

    Attributes:
        violations (List[str]): The validation messages.
    """

    def __init__(self, violations: List[str]) -> None:
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class RuleError(ZXError):
    """Raised when a rule is used on a site it does not fit, or produces an invalid diagram."""


class StaleSiteError(RuleError):
    """Raised when a match site no longer embeds in the diagram."""


class DerivationError(ZXError):
    """
    Raised when a derivation fails to replay.

    Attributes:
        step_index (int): Index of the failing step.
    """

    def __init__(self, message: str, step_index: Optional[int] = None) -> None:
        self.step_index = step_index
        if step_index is not None:
            message = f"step {step_index}: {message}"
        super().__init__(message)


class NonScalarError(ZXError):
    """Raised when a scalar operation receives a diagram with boundary wires."""


class NotZeroError(ZXError):
    """Raised when the zero normal form is requested for a non-zero diagram."""


class ScalarDecompositionError(ZXError):
    """Raised when an exact value is not of the form sqrt(2)^r e^(i s pi/4)."""


class DiagramFileError(ZXError):
    """
    Raised when a diagram file cannot be parsed.

    Attributes:
        location (str): Where in the file the problem was found.
    """

    def __init__(self, message: str, location: str = "") -> None:
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)
