"""
RewriteRule class: a parametric, exactly scaled equation between two diagram patterns.
"""
from __future__ import annotations

from typing import Callable, Iterable, List, Tuple

from scaledzx.core import colour_swap, flip
from scaledzx.models.Derivation import BACKWARD, FORWARD
from scaledzx.models.Diagram import Diagram
from scaledzx.models.MatchSite import MatchSite

Builder = Callable[[Tuple], Diagram]
Matcher = Callable[[Diagram], List[MatchSite]]
Instances = Callable[[int], Iterable[Tuple]]


def _no_matches(d: Diagram) -> List[MatchSite]:
    return []


class RewriteRule:
    """
    A rewrite rule lhs = rhs, both sides built from a parameter tuple.

    The side being matched is the pattern; the other side is the replacement. Both sides list
    their boundary as inputs followed by outputs, and a site's legs follow that order.

    Attributes:
        rule_id (str): Registry id, closure suffixes included.
        description (str): One-line summary.
        lhs (Callable): params -> left-hand side diagram.
        rhs (Callable): params -> right-hand side diagram.
        instances (Callable): leg bound -> parameter tuples for the soundness sweep.
        derived (bool): True for rules derivable from the primitive set.
        negative_control (bool): True for deliberately unsound rules.

    Methods:
        pattern: The side matched in a direction.
        replacement: The side inserted in a direction.
        matches: Match sites in a diagram for a direction.
        dual: The colour-swapped rule.
        flipped: The upside-down rule.
    """

    def __init__(
        self,
        rule_id: str,
        description: str,
        lhs: Builder,
        rhs: Builder,
        instances: Instances,
        match_forward: Matcher = _no_matches,
        match_backward: Matcher = _no_matches,
        derived: bool = False,
        negative_control: bool = False,
        closed: bool = True,
    ) -> None:
        self.rule_id = rule_id
        self.description = description
        self.lhs = lhs
        self.rhs = rhs
        self.instances = instances
        self._match_forward = match_forward
        self._match_backward = match_backward
        self.derived = derived
        self.negative_control = negative_control
        self.closed = closed

    def pattern(self, direction: str, params: Tuple) -> Diagram:
        return self.lhs(params) if direction == FORWARD else self.rhs(params)

    def replacement(self, direction: str, params: Tuple) -> Diagram:
        return self.rhs(params) if direction == FORWARD else self.lhs(params)

    def matches(self, d: Diagram, direction: str) -> List[MatchSite]:
        matcher = self._match_forward if direction == FORWARD else self._match_backward
        return matcher(d)

    def dual(self) -> RewriteRule:
        """
        The colour-swapped rule; its sites are the base rule's sites in the swapped diagram.
        """
        base = self
        return RewriteRule(
            f"{self.rule_id}.dual",
            f"{self.description} (colours swapped)",
            lambda p: colour_swap(base.lhs(p)),
            lambda p: colour_swap(base.rhs(p)),
            base.instances,
            lambda d: base.matches(colour_swap(d), FORWARD),
            lambda d: base.matches(colour_swap(d), BACKWARD),
            self.derived,
            self.negative_control,
            closed=False,
        )

    def flipped(self) -> RewriteRule:
        """
        The upside-down rule; legs are reordered so former outputs come first.
        """
        base = self

        def reorder(direction: str) -> Matcher:
            def matcher(d: Diagram) -> List[MatchSite]:
                sites = []
                for site in base.matches(d, direction):
                    n_in = len(base.pattern(direction, site.params).inputs)
                    sites.append(site._replace(legs=site.legs[n_in:] + site.legs[:n_in]))
                return sites

            return matcher

        return RewriteRule(
            f"{self.rule_id}.flip",
            f"{self.description} (upside down)",
            lambda p: flip(base.lhs(p)),
            lambda p: flip(base.rhs(p)),
            base.instances,
            reorder(FORWARD),
            reorder(BACKWARD),
            self.derived,
            self.negative_control,
            closed=False,
        )

    def variants(self) -> List[RewriteRule]:
        """
        The rule and its closure variants: base, .dual, .flip, .dual.flip.
        """
        if not self.closed:
            return [self]
        dual = self.dual()
        return [self, dual, self.flipped(), dual.flipped()]

    def __str__(self) -> str:
        return f"{self.rule_id}: {self.description}"

    def __repr__(self) -> str:
        return self.__str__()
