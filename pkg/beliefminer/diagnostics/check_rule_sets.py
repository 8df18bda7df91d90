import logging
import math

from ..components.belief import passes_criterion
from ..components.rule import Rule, RuleSet


def get_rule_set_violations(ruleset: RuleSet, atomic: RuleSet = None) -> list[str]:
    """
    Gets violated invariants of a mined rule set and sends them to the logger

    - rule count exceeding the conclusion count
    - belief outside [0, 1]
    - retained rules failing the increasing belief criterion on their counts
    - conjunctive rules with an atomic constituent missing from the atomic set

    :param RuleSet ruleset: rule set to check
    :param RuleSet atomic: atomic rule set a conjunctive rule set was searched on
    :return: descriptions of the violations
    :rtype: list
    """
    logger = logging.getLogger(__name__)
    selector = ruleset.params.selector if ruleset.params is not None else 1.0
    violations = []

    for tracker in ruleset.in_set_trackers():
        rule = tracker.rule
        if ruleset.method == "frm":
            continue
        if tracker.rule_count > tracker.conclusion_count:
            violations.append(
                f"{rule} has rule count {tracker.rule_count} above its conclusion "
                f"count {tracker.conclusion_count}"
            )
            continue
        if math.isnan(tracker.belief) or not 0 <= tracker.belief <= 1:
            violations.append(f"{rule} has belief {tracker.belief} outside [0, 1]")
        if tracker.rule_count == 0 or not passes_criterion(
            tracker.rule_count, tracker.conclusion_count, selector
        ):
            violations.append(f"{rule} is retained without increasing belief")
        if atomic is not None and not rule.is_atomic:
            for premise in rule.premise:
                constituent = Rule.atomic(premise, rule.conclusion[0])
                if constituent not in atomic:
                    violations.append(
                        f"{rule} is retained but its constituent {constituent} is not"
                    )

    for violation in violations:
        logger.info(violation)
    return violations
