"""
Report: what a command prints.
"""
from typing import NamedTuple, Optional, Tuple


class Report(NamedTuple):
    """
    Attributes:
        command (str): The command that produced the report.
        digests (Tuple[str, ...]): sha256 of each input file.
        payload (str): Matrix, normal form, verdict or table text.
        derivation (str, optional): Derivation text, one step per line.
    """

    command: str
    digests: Tuple[str, ...]
    payload: str
    derivation: Optional[str] = None

    def to_text(self) -> str:
        lines = [f"# {self.command}"]
        lines += [f"# input sha256 {digest}" for digest in self.digests]
        lines.append(self.payload.rstrip("\n"))
        if self.derivation is not None:
            lines.append("# derivation")
            if self.derivation:
                lines.append(self.derivation.rstrip("\n"))
        return "\n".join(lines) + "\n"
