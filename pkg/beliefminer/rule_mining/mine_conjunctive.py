from collections import Counter, defaultdict
from itertools import combinations

import numpy as np

from ..components.belief import passes_criterion, quick_belief
from ..components.parameters import MiningParams
from ..components.rule import Rule, RuleSet, RuleTracker, sort_symbols
from ..data_management.dataset import Dataset, TIMESERIES
from .utilities import check_mining_input, window_ends
import logging

log = logging.getLogger(__name__)


def group_premises(ruleset: RuleSet) -> dict:
    """
    Groups the retained atomic rules by conclusion

    :param RuleSet ruleset: atomic rule set
    :return: dict conclusion -> sorted tuple of premise symbols
    :rtype: dict
    """
    groups = defaultdict(set)
    for tracker in ruleset.in_set_trackers():
        rule = tracker.rule
        if rule.is_atomic and not rule.is_self_rule:
            groups[rule.conclusion[0]].add(rule.premise[0])
    return {b: sort_symbols(premises) for b, premises in groups.items()}


class PremiseProjections:
    """
    Counts gathered by one pass over the data, from which the counts of every
    premise combination of a conclusion are read

    For each conclusion b, every observation (record, or stream position with its
    preceding window region) is projected onto the candidate premise symbols of b.
    rule_tables holds the projections of observations of b, premise_tables those of
    all observations.
    """

    def __init__(self):
        self.rule_tables = defaultdict(Counter)
        self.premise_tables = defaultdict(Counter)

    def add(self, conclusion, projection: frozenset, conclusion_observed: bool):
        self.premise_tables[conclusion][projection] += 1
        if conclusion_observed:
            self.rule_tables[conclusion][projection] += 1

    def rule_count(self, conclusion, premise: frozenset) -> int:
        return sum(
            count
            for projection, count in self.rule_tables[conclusion].items()
            if premise <= projection
        )

    def premise_count(self, conclusion, premise: frozenset) -> int:
        return sum(
            count
            for projection, count in self.premise_tables[conclusion].items()
            if premise <= projection
        )


def count_premise_projections(
    dataset: Dataset, params: MiningParams, groups: dict
) -> PremiseProjections:
    """
    Single counting pass over the data for the conjunctive premise search

    Database: a premise combination is observed in every record containing it, the
    rule when the record also contains the conclusion. Timeseries: at every stream
    position the region of the windows reaching that position (strictly before it)
    is projected; the rule is observed when the position holds the conclusion, so
    each conclusion occurrence counts once.

    :param Dataset dataset: mined dataset
    :param MiningParams params: mining parameters
    :param dict groups: conclusion -> candidate premise symbols
    :return: projection tables
    :rtype: PremiseProjections
    """
    projections = PremiseProjections()
    group_sets = {b: frozenset(premises) for b, premises in groups.items()}

    if dataset.mode == TIMESERIES:
        symbols = dataset.symbols
        ends = window_ends(dataset, params)
        # first window start reaching each position
        region_starts = np.searchsorted(ends, np.arange(len(symbols)), side="right")
        for position, symbol in enumerate(symbols):
            region = frozenset(symbols[region_starts[position] : position])
            for b, premises in group_sets.items():
                projections.add(b, region & premises, symbol == b)
    else:
        for record in dataset.records:
            symbols = record.symbol_set
            for b, premises in group_sets.items():
                projections.add(b, symbols & premises, b in symbols)
    return projections


def mine_conjunctive(
    ruleset: RuleSet,
    dataset: Dataset,
    params: MiningParams,
    conclusion_size: int = 1,
) -> RuleSet:
    """
    Searches rules with conjunctive premises (a, b, ...) -> d

    Premise candidates of a conclusion are the premises of its retained atomic
    rules. Combinations are searched breadth first by size; a combination that fails
    the criterion is blocked, and no combination containing a blocked one is
    evaluated. Blocking is kept per conclusion.

    :param RuleSet ruleset: atomic rule set from mine_atomic
    :param Dataset dataset: the dataset the atomic rules were mined on
    :param MiningParams params: mining parameters
    :param int conclusion_size: only atomic conclusions (1) are searched
    :return: rule set holding the conjunctive premise rules
    :rtype: RuleSet
    """
    if conclusion_size != 1:
        raise NotImplementedError(
            "Conjunctive conclusions are not searched; their belief follows from "
            "the atomic rules and the search depends on the application"
        )
    check_mining_input(dataset, params)

    result = RuleSet(method="brm_conjunctive", dataset_size=dataset.size)
    result.params = params
    result.conclusion_counts = Counter(ruleset.conclusion_counts)

    groups = {b: p for b, p in group_premises(ruleset).items() if len(p) >= 2}
    if not groups:
        log.info("No conclusion has two or more premises, no conjunctive search")
        return result

    projections = count_premise_projections(dataset, params, groups)

    for conclusion, premises in groups.items():
        conclusion_count = ruleset.conclusion_counts[conclusion]
        blocked = []
        size = 2
        level = [frozenset(c) for c in combinations(premises, size)]
        while level:
            for combination in level:
                rule_count = projections.rule_count(conclusion, combination)
                if rule_count == 0 or not passes_criterion(
                    rule_count, conclusion_count, params.selector
                ):
                    blocked.append(combination)
                    continue
                rule = Rule(tuple(combination), (conclusion,))
                result.add(
                    RuleTracker(
                        rule=rule,
                        rule_count=rule_count,
                        conclusion_count=conclusion_count,
                        belief=quick_belief(
                            rule_count, conclusion_count, params.prior, params.selector
                        ),
                        in_set=True,
                    )
                )
                result.premise_counts[rule.premise] = projections.premise_count(
                    conclusion, combination
                )

            size += 1
            level = [
                frozenset(c)
                for c in combinations(premises, size)
                if not any(b <= frozenset(c) for b in blocked)
            ]

    log_msg = f"Conjunctive premise search found {len(result)} rules"
    log.info(log_msg)
    return result
