import math
from dataclasses import dataclass, replace

from ..components.belief import estimate_p_ab, min_selector
from ..components.rule import Rule, RuleSet


@dataclass(frozen=True)
class ScoredRule:
    """
    Rule with its counters and interest metrics

    - confidence: #r / #a
    - bayes_factor: #r over the summed counts of the other retained rules with the
      same premise, +inf without competitors
    - support: #r / |D|
    - belief: belief after mining (nan for frequent rules)
    - p_ab, min_selector: P(a|b) at s = 1 and the smallest passing selector, None
      where #r > #b (frequent rules in windows)
    - lift: confidence over the support of the conclusion
    - odds_ratio, ci95: filled by the odds ratio evaluation
    """

    rule: Rule
    confidence: float
    bayes_factor: float
    support: float
    belief: float
    rule_count: int = 0
    conclusion_count: int = 0
    premise_count: int = 0
    p_ab: float | None = None
    min_selector: float | None = None
    lift: float | None = None
    odds_ratio: float | None = None
    ci95: tuple[float, float] | None = None

    @property
    def premise(self) -> tuple:
        return self.rule.premise

    @property
    def conclusion(self) -> tuple:
        return self.rule.conclusion

    def with_odds_ratio(self, odds_ratio: float, ci95: tuple) -> "ScoredRule":
        return replace(self, odds_ratio=odds_ratio, ci95=ci95)


def confidence(rule_count: int, premise_count: int) -> float:
    """
    Confidence of a rule, #r / #a

    :param int rule_count: rule count #r
    :param int premise_count: premise count #a
    :return: confidence
    :rtype: float
    """
    if premise_count <= 0:
        raise ValueError("Confidence is undefined for a premise that never occurs")
    return rule_count / premise_count


def bayes_factor(rule: Rule, ruleset: RuleSet) -> float:
    """
    Bayes factor of a rule against the other retained rules sharing its premise

    :param Rule rule: rule in the rule set
    :param RuleSet ruleset: rule set
    :return: #r / sum of the counts of competing rules, +inf without competitors
    :rtype: float
    """
    if rule not in ruleset:
        raise ValueError(f"Rule {rule} is not in the rule set")
    competitors = sum(
        t.rule_count
        for t in ruleset.in_set_trackers()
        if t.rule.premise == rule.premise and t.rule != rule
    )
    if competitors == 0:
        return math.inf
    return ruleset.trackers[rule].rule_count / competitors


def score_rules(ruleset: RuleSet) -> list[ScoredRule]:
    """
    Computes the metrics of every retained rule

    :param RuleSet ruleset: mined rule set
    :return: scored rules in canonical order
    :rtype: list
    """
    competitors = {}
    for tracker in ruleset.in_set_trackers():
        premise = tracker.rule.premise
        competitors[premise] = competitors.get(premise, 0) + tracker.rule_count

    scored = []
    for tracker in ruleset.in_set_trackers():
        rule = tracker.rule
        premise_count = ruleset.premise_count(rule)
        others = competitors[rule.premise] - tracker.rule_count
        rule_confidence = confidence(tracker.rule_count, premise_count)

        p_ab = selector = None
        if 0 < tracker.rule_count <= tracker.conclusion_count:
            p_ab = estimate_p_ab(tracker.rule_count, tracker.conclusion_count, 1.0)
            selector = min_selector(tracker.rule_count, tracker.conclusion_count)

        rule_lift = ruleset.lifts.get(rule)
        if rule_lift is None and tracker.conclusion_count > 0:
            conclusion_support = tracker.conclusion_count / ruleset.dataset_size
            rule_lift = rule_confidence / conclusion_support

        scored.append(
            ScoredRule(
                rule=rule,
                confidence=rule_confidence,
                bayes_factor=math.inf if others == 0 else tracker.rule_count / others,
                support=tracker.rule_count / ruleset.dataset_size,
                belief=tracker.belief,
                rule_count=tracker.rule_count,
                conclusion_count=tracker.conclusion_count,
                premise_count=premise_count,
                p_ab=p_ab,
                min_selector=selector,
                lift=rule_lift,
            )
        )
    return scored


def required_selector(ruleset: RuleSet, rules: list[Rule]) -> float:
    """
    Largest selector s at which every given rule is still extracted

    :param RuleSet ruleset: rule set mined at s = 0 (holding every candidate)
    :param list rules: rules that need to be extracted
    :return: minimum over the rules' smallest passing selectors
    :rtype: float
    """
    selectors = []
    for rule in rules:
        if rule not in ruleset.trackers:
            raise ValueError(f"Rule {rule} was never observed")
        tracker = ruleset.trackers[rule]
        conclusion_count = ruleset.conclusion_counts[rule.conclusion[0]]
        selectors.append(min_selector(tracker.rule_count, conclusion_count))
    return min(selectors) if selectors else 1.0
