from collections import Counter, defaultdict

from ..components.belief import (
    belief_update,
    estimate_p_ab,
    passes_criterion,
    quick_belief,
)
from ..components.parameters import MiningParams
from ..components.rule import Rule, RuleSet, RuleTracker, symbol_sort_key
from ..data_management.dataset import Dataset, TIMESERIES, DATABASE
from .utilities import check_mining_input, select_candidate_rules, window_ends
import logging

log = logging.getLogger(__name__)


def mine_atomic(dataset: Dataset, params: MiningParams) -> RuleSet:
    """
    Mines atomic rules with the increasing belief criterion in a single pass

    At every step (window or record) the global symbol counters are updated, every
    candidate rule is counted and evaluated against the current counters: passing
    rules enter the rule set, failing rules leave it (and may enter again later).
    After the pass, retained rules are checked against the final counters and their
    belief is computed from the final counts.

    :param Dataset dataset: timeseries or database
    :param MiningParams params: mining parameters
    :return: rule set with a tracker for every candidate rule
    :rtype: RuleSet
    """
    check_mining_input(dataset, params)

    ruleset = RuleSet(method="brm", dataset_size=dataset.size)
    ruleset.params = params

    if dataset.mode == TIMESERIES:
        _mine_timeseries(ruleset, dataset, params)
    else:
        _mine_database(ruleset, dataset, params)

    log_msg = (
        f"Mining pass done: {len(ruleset.trackers)} candidate rules, "
        f"{len(ruleset)} with increasing belief"
    )
    log.debug(log_msg)

    cross_check_rules(ruleset, params.selector)
    quick_update_belief(ruleset, params.prior, params.selector)
    return ruleset


def _observe(
    ruleset: RuleSet, tracker: RuleTracker, occurrence, selector: float
) -> bool:
    """
    Counts one observation of a candidate rule and re-evaluates its membership

    :param RuleSet ruleset: rule set holding the global counters
    :param RuleTracker tracker: tracker of the candidate rule
    :param occurrence: conclusion occurrence to pair with, None if all occurrences
        in the current step were already paired with this rule
    :param float selector: selector s
    :return: membership after the observation
    :rtype: bool
    """
    conclusion_count = ruleset.conclusion_counts[tracker.rule.conclusion[0]]
    if occurrence is not None and tracker.pair(occurrence):
        p_ab = estimate_p_ab(tracker.rule_count, conclusion_count, selector)
        tracker.belief = belief_update(tracker.belief, p_ab)
    tracker.conclusion_count = conclusion_count
    tracker.in_set = passes_criterion(tracker.rule_count, conclusion_count, selector)
    return tracker.in_set


def _mine_timeseries(ruleset: RuleSet, dataset: Dataset, params: MiningParams):
    """
    Mining pass over the observation windows of a timeseries

    Each event is counted when it enters a window. The head of a window is paired
    with the earliest occurrence of every later symbol that the rule has not paired
    yet; occurrence identifiers are event indices.
    """
    symbols = dataset.symbols
    ends = window_ends(dataset, params)

    positions = defaultdict(list)
    for index, symbol in enumerate(symbols):
        positions[symbol].append(index)

    rules = {}
    next_occurrence = {}
    window_counts = Counter()
    exposed = 0

    for start, end in enumerate(ends):
        while exposed < end:
            symbol = symbols[exposed]
            ruleset.conclusion_counts[symbol] += 1
            window_counts[symbol] += 1
            ruleset.events_touched += 1
            exposed += 1

        head = symbols[start]
        candidates = [
            x
            for x, count in window_counts.items()
            if count > (1 if x == head else 0) and (x != head or params.self_rules)
        ]
        for x in sorted(candidates, key=symbol_sort_key):
            key = (head, x)
            if key not in rules:
                rules[key] = Rule.atomic(head, x)
            tracker = ruleset.tracker(rules[key], params.prior)

            occurrences = positions[x]
            pointer = next_occurrence.get(key, 0)
            while pointer < len(occurrences) and occurrences[pointer] <= start:
                pointer += 1
            occurrence = None
            if pointer < len(occurrences) and occurrences[pointer] < end:
                occurrence = occurrences[pointer]
                pointer += 1
            next_occurrence[key] = pointer

            _observe(ruleset, tracker, occurrence, params.selector)

        window_counts[head] -= 1


def _mine_database(ruleset: RuleSet, dataset: Dataset, params: MiningParams):
    """
    Mining pass over the records of a database; occurrence identifiers are record
    indices
    """
    for index, record in enumerate(dataset.records):
        ruleset.conclusion_counts.update(record.symbols)
        ruleset.events_touched += 1

        candidates = select_candidate_rules(record, DATABASE)
        for rule in sorted(candidates, key=lambda r: r.sort_key):
            tracker = ruleset.tracker(rule, params.prior)
            _observe(ruleset, tracker, index, params.selector)


def cross_check_rules(ruleset: RuleSet, selector: float = 1.0) -> RuleSet:
    """
    Checks retained rules for loss of belief against the final counters

    A rule can saturate early, or its conclusion can keep occurring without the
    premise after its last observation; both are caught by testing the final
    counts. The result does not depend on the order of the data.

    :param RuleSet ruleset: rule set after the mining pass
    :param float selector: selector s
    :return: the same rule set, updated in place
    :rtype: RuleSet
    """
    removed = 0
    for tracker in ruleset.in_set_trackers():
        conclusion_count = ruleset.conclusion_counts[tracker.rule.conclusion[0]]
        tracker.conclusion_count = conclusion_count
        if not passes_criterion(tracker.rule_count, conclusion_count, selector):
            tracker.in_set = False
            removed += 1
            log.debug(
                f"Rule {tracker.rule} lost belief: {tracker.rule_count} of "
                f"{conclusion_count} conclusions"
            )

    if removed:
        log_msg = f"Cross check removed {removed} rules that lost belief"
        log.debug(log_msg)
    return ruleset


def quick_update_belief(ruleset: RuleSet, p: float, selector: float = 1.0) -> RuleSet:
    """
    Sets the belief of retained rules from their final counts

    Assumes all unassociated conclusions occurred before the first rule observation,
    so no further pass over the data is needed.

    :param RuleSet ruleset: rule set after the cross check
    :param float p: prior belief
    :param float selector: selector s
    :return: the same rule set, updated in place
    :rtype: RuleSet
    """
    for tracker in ruleset.in_set_trackers():
        tracker.belief = quick_belief(
            tracker.rule_count, tracker.conclusion_count, p, selector
        )
    return ruleset
