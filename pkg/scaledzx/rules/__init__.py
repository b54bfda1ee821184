"""
The rule registry: primitive rules with their closure variants, derived rules, lemma rules and
the negative controls.
"""
from functools import lru_cache
from typing import Dict, List

from scaledzx.models.RewriteRule import RewriteRule
from scaledzx.rules.derived import DERIVED_RULES
from scaledzx.rules.lemmas import LEMMA_RULES
from scaledzx.rules.primitive import NEGATIVE_CONTROLS, PRIMITIVE_RULES


def rule_registry() -> List[RewriteRule]:
    """
    The primitive rules, without closure variants.
    """
    return list(PRIMITIVE_RULES)


def closure_variants(rules: List[RewriteRule]) -> List[RewriteRule]:
    variants: List[RewriteRule] = []
    for rule in rules:
        variants.extend(rule.variants())
    return variants


def derived_rules() -> List[RewriteRule]:
    return list(DERIVED_RULES) + list(LEMMA_RULES)


def negative_controls() -> List[RewriteRule]:
    return list(NEGATIVE_CONTROLS)


@lru_cache(maxsize=1)
def _index() -> Dict[str, RewriteRule]:
    rules = closure_variants(rule_registry() + derived_rules() + negative_controls())
    return {rule.rule_id: rule for rule in rules}


def all_rule_ids() -> List[str]:
    return sorted(_index())


def lookup(rule_id: str) -> RewriteRule:
    """
    The rule (or closure variant) registered under `rule_id`.

    Raises:
        KeyError: For unknown ids.
    """
    try:
        return _index()[rule_id]
    except KeyError:
        raise KeyError(f"Unknown rule id {rule_id!r}") from None
