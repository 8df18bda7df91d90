from .metrics import ScoredRule

FILTERS = ("none", "confidence", "bayes_factor", "best_confidence")


def filter_confidence(rules: list[ScoredRule], threshold: float = 0.5) -> list:
    """
    Keeps rules with confidence >= threshold

    :param list rules: scored rules
    :param float threshold: confidence threshold
    :return: kept rules
    :rtype: list
    """
    return [r for r in rules if r.confidence >= threshold]


def filter_bayes_factor(rules: list[ScoredRule], threshold: float = 1.0) -> list:
    """
    Keeps rules with Bayes factor >= threshold; an infinite Bayes factor passes any
    threshold

    :param list rules: scored rules
    :param float threshold: Bayes factor threshold
    :return: kept rules
    :rtype: list
    """
    return [r for r in rules if r.bayes_factor >= threshold]


def filter_best_confidence_per_conclusion(rules: list[ScoredRule]) -> list:
    """
    Keeps, for every conclusion, the rule(s) with the highest confidence; ties are
    all kept

    :param list rules: scored rules
    :return: kept rules
    :rtype: list
    """
    best = {}
    for r in rules:
        best[r.conclusion] = max(best.get(r.conclusion, r.confidence), r.confidence)
    return [r for r in rules if r.confidence == best[r.conclusion]]


def apply_filter(
    rules: list[ScoredRule], name: str, threshold: float = None
) -> list[ScoredRule]:
    """
    Applies a filter by name

    :param list rules: scored rules
    :param str name: none, confidence, bayes_factor or best_confidence
    :param float threshold: threshold of the confidence and Bayes factor filters,
        their defaults (0.5, 1.0) if not given
    :return: kept rules
    :rtype: list
    """
    name = name.replace("-", "_")
    if name == "none":
        return list(rules)
    elif name == "confidence":
        return filter_confidence(rules, 0.5 if threshold is None else threshold)
    elif name == "bayes_factor":
        return filter_bayes_factor(rules, 1.0 if threshold is None else threshold)
    elif name == "best_confidence":
        return filter_best_confidence_per_conclusion(rules)
    raise ValueError(f"Unknown filter '{name}', choose one of {FILTERS}")
