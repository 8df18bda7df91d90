from dataclasses import dataclass, field
from typing import Iterable

from ..components.rule import Rule, RuleSet
from ..data_preprocessing.synthetic_data import GeneratorConfig

CATEGORIES = ("R_r", "R_c", "R_rc", "R_cr", "R_cv")


@dataclass
class CategoryCounts:
    """
    Number of extracted rules per category and the size of every category

    - R_r: rules between random process symbols (self-rules included)
    - R_c: consecutive chain transitions
    - R_rc: random symbol -> chain symbol
    - R_cr: chain symbol -> random symbol
    - R_cv: chain symbol pairs that are no chain transition
    - other: rules outside the vocabularies or with conjunctive parts
    """

    extracted: dict = field(default_factory=lambda: dict.fromkeys(CATEGORIES, 0))
    denominators: dict = field(default_factory=dict)
    other: int = 0

    @classmethod
    def for_config(cls, cfg: GeneratorConfig) -> "CategoryCounts":
        n_random = len(set(cfg.v_random))
        n_chain = len(set(cfg.chain))
        transitions = len(_chain_transitions(cfg))
        return cls(
            denominators={
                "R_r": n_random**2,
                "R_c": transitions,
                "R_rc": n_random * n_chain,
                "R_cr": n_chain * n_random,
                "R_cv": n_chain**2 - transitions,
            }
        )


def _chain_transitions(cfg: GeneratorConfig) -> set:
    return set(zip(cfg.chain, cfg.chain[1:]))


def categorize_rule(rule: Rule, cfg: GeneratorConfig) -> str:
    """
    Category of one rule

    :param Rule rule: rule
    :param GeneratorConfig cfg: generator configuration
    :return: category name or "other"
    :rtype: str
    """
    if not rule.is_atomic:
        return "other"
    a, b = rule.premise[0], rule.conclusion[0]
    random_symbols = set(cfg.v_random)
    chain_symbols = set(cfg.chain)
    if a in random_symbols and b in random_symbols:
        return "R_r"
    if a in random_symbols and b in chain_symbols:
        return "R_rc"
    if a in chain_symbols and b in random_symbols:
        return "R_cr"
    if a in chain_symbols and b in chain_symbols:
        return "R_c" if (a, b) in _chain_transitions(cfg) else "R_cv"
    return "other"


def categorize_rules(rules: RuleSet | Iterable, cfg: GeneratorConfig) -> CategoryCounts:
    """
    Counts the extracted rules per category

    :param rules: rule set, or iterable of rules or scored rules
    :param GeneratorConfig cfg: generator configuration
    :return: counts per category
    :rtype: CategoryCounts
    """
    if isinstance(rules, RuleSet):
        rules = rules.rules
    counts = CategoryCounts.for_config(cfg)
    for rule in rules:
        rule = getattr(rule, "rule", rule)
        category = categorize_rule(rule, cfg)
        if category == "other":
            counts.other += 1
        else:
            counts.extracted[category] += 1
    return counts


def extraction_rate(counts: CategoryCounts, category: str) -> float:
    """
    Percentage of the rules of a category that were extracted

    :param CategoryCounts counts: category counts
    :param str category: category name
    :return: 100 * extracted / size of category
    :rtype: float
    """
    if category not in CATEGORIES:
        raise ValueError(f"Unknown category '{category}', choose one of {CATEGORIES}")
    denominator = counts.denominators[category]
    if denominator == 0:
        raise ValueError(f"Category {category} is empty for this configuration")
    return 100 * counts.extracted[category] / denominator
