"""
Building the text reports printed by the runner.
"""
import concurrent.futures
import logging
from typing import Dict, List, Optional, Sequence, Union

import pandas as pd

from scaledzx.models.Derivation import Derivation
from scaledzx.models.EqualityResult import EqualityResult
from scaledzx.models.ExactMatrix import ExactMatrix
from scaledzx.models.GslcForm import GslcForm
from scaledzx.models.MeasurementResult import MeasurementResult
from scaledzx.models.Report import Report
from scaledzx.models.RewriteRule import RewriteRule
from scaledzx.models.ScalarNF import ScalarNF
from scaledzx.models.SoundnessReport import SoundnessReport
from scaledzx.models.ZeroNF import ZeroNF
from scaledzx.rewrite import verify_rule_soundness

logger = logging.getLogger(__name__)

NormalForm = Union[ScalarNF, ZeroNF, GslcForm]


def matrix_payload(matrix: ExactMatrix, approx: bool = False) -> str:
    """
    Exact entries row by row (rows indexed by outputs), optionally followed by decimals.

    Args:
        matrix (ExactMatrix): The interpretation.
        approx (bool): Also print 15-digit decimals, labelled as approximate.

    Returns:
        str: The payload text.
    """
    lines = [f"matrix {matrix.shape[0]}x{matrix.shape[1]} (exact, basis 1, ω, ω², ω³)", str(matrix)]
    if approx:
        lines.append("approximate (not authoritative)")
        lines += ["[" + ", ".join(e.approx(15) for e in row) + "]" for row in matrix.rows()]
    return "\n".join(lines)


def normal_form_report(
    command: str, digests: Sequence[str], form: NormalForm, derivation: Derivation
) -> Report:
    payload = f"{form.to_text()}\nsteps {len(derivation)}"
    return Report(command, tuple(digests), payload, derivation.to_text())


def equality_report(command: str, digests: Sequence[str], result: EqualityResult) -> Report:
    lines = [f"equal {str(result.equal).lower()}"]
    if result.left is not None and result.right is not None:
        lines.append(f"steps {len(result.left)} {len(result.right)}")
    if result.form is not None:
        lines.append(f"normal form {result.form.to_text()}")
    return Report(command, tuple(digests), "\n".join(lines))


def soundness_frame(reports: Sequence[SoundnessReport]) -> pd.DataFrame:
    """
    One row per rule: id, flags, instantiation count, failure count and verdict.
    """
    rows = [
        {
            "rule": r.rule_id,
            "kind": "negative control" if r.negative_control else "derived" if r.derived else "primitive",
            "instances": r.instances,
            "failures": len(r.failures),
            "result": "pass" if r.passed else "FAIL",
            "expected": "yes" if r.as_expected else "no",
        }
        for r in reports
    ]
    columns = ["rule", "kind", "instances", "failures", "result", "expected"]
    return pd.DataFrame(rows, columns=columns)


def soundness_report(command: str, reports: Sequence[SoundnessReport]) -> Report:
    df = soundness_frame(reports)
    unexpected = int((df["expected"] == "no").sum())
    payload = (
        df.to_markdown(index=False)
        + f"\n\nrules {len(df)}, instances {int(df['instances'].sum())}, unexpected {unexpected}"
    )
    return Report(command, (), payload)


def bb84_report(command: str, results: Sequence[MeasurementResult]) -> Report:
    return Report(command, (), "\n".join(result.to_text() for result in results))


def verify_rules(
    rules: Sequence[RewriteRule], legs: int, workers: Optional[int] = None
) -> List[SoundnessReport]:
    """
    Sweeps every rule against the oracle on a thread pool; reports come back in rule order.

    Args:
        rules (Sequence[RewriteRule]): The rules to sweep.
        legs (int): Leg-count bound per spider.
        workers (int, optional): Pool size.

    Returns:
        List[SoundnessReport]: One report per rule.
    """
    reports: List[Optional[SoundnessReport]] = [None] * len(rules)
    with concurrent.futures.ThreadPoolExecutor(
        max_workers=workers, thread_name_prefix="zx"
    ) as executor:
        futures: Dict[concurrent.futures.Future, int] = {
            executor.submit(verify_rule_soundness, rule, legs): i for i, rule in enumerate(rules)
        }

        for tasks_completed, task in enumerate(concurrent.futures.as_completed(futures), 1):
            i = futures[task]
            reports[i] = task.result()
            logger.info(f"Completed {tasks_completed} of {len(futures)} rules: {rules[i].rule_id}")

    return reports
