from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator

Symbol = Hashable


def symbol_sort_key(symbol: Symbol) -> tuple:
    """
    Canonical sort key of a symbol: integers before strings, each in natural order

    :param symbol: symbol token
    :return: sort key
    :rtype: tuple
    """
    if isinstance(symbol, int):
        return 0, symbol, ""
    return 1, 0, str(symbol)


def sort_symbols(symbols: Iterable[Symbol]) -> tuple:
    """
    Sorts symbols canonically

    :param symbols: symbols to sort
    :return: sorted symbols
    :rtype: tuple
    """
    return tuple(sorted(symbols, key=symbol_sort_key))


@dataclass(frozen=True)
class Rule:
    """
    Directed association premise -> conclusion

    Premise and conclusion are stored canonically sorted. Both need to be non-empty
    and disjoint; the only exception are atomic self-rules x -> x that pair two
    occurrences of the same symbol in a timeseries.
    """

    premise: tuple
    conclusion: tuple

    def __post_init__(self):
        premise = sort_symbols(set(self.premise))
        conclusion = sort_symbols(set(self.conclusion))
        if not premise or not conclusion:
            raise ValueError("Premise and conclusion of a rule cannot be empty")
        is_self_rule = len(premise) == 1 and premise == conclusion
        if set(premise) & set(conclusion) and not is_self_rule:
            raise ValueError(
                f"Premise {premise} and conclusion {conclusion} of a rule need to be "
                f"disjoint"
            )
        object.__setattr__(self, "premise", premise)
        object.__setattr__(self, "conclusion", conclusion)

    @classmethod
    def atomic(cls, premise: Symbol, conclusion: Symbol) -> "Rule":
        """
        Creates an atomic rule a -> b

        :param premise: premise symbol a
        :param conclusion: conclusion symbol b
        :return: atomic rule
        :rtype: Rule
        """
        return cls((premise,), (conclusion,))

    @property
    def is_atomic(self) -> bool:
        return len(self.premise) == 1 and len(self.conclusion) == 1

    @property
    def is_self_rule(self) -> bool:
        return self.is_atomic and self.premise == self.conclusion

    @property
    def sort_key(self) -> tuple:
        return (
            tuple(symbol_sort_key(s) for s in self.premise),
            tuple(symbol_sort_key(s) for s in self.conclusion),
        )

    def __str__(self):
        premise = ", ".join(str(s) for s in self.premise)
        conclusion = ", ".join(str(s) for s in self.conclusion)
        return f"{premise} -> {conclusion}"


@dataclass
class RuleTracker:
    """
    Counters and belief state of one rule during mining

    - rule_count: number of rule observations #r
    - conclusion_count: global conclusion count #b at the most recent evaluation
    - belief: current belief of the rule
    - in_set: whether the rule is currently retained
    - paired_conclusions: identifiers of the conclusion occurrences that were
      already paired with this rule; each occurrence counts once
    """

    rule: Rule
    rule_count: int = 0
    conclusion_count: int = 0
    belief: float = 0.5
    in_set: bool = False
    paired_conclusions: set = field(default_factory=set)

    def pair(self, occurrence: Hashable) -> bool:
        """
        Counts a rule observation for a conclusion occurrence, unless the occurrence
        was already paired with this rule

        :param occurrence: identifier of the conclusion occurrence
        :return: True if the rule count was incremented
        :rtype: bool
        """
        if occurrence in self.paired_conclusions:
            return False
        self.paired_conclusions.add(occurrence)
        self.rule_count += 1
        return True


class RuleSet:
    """
    Rules found by a mining run together with the counters they were selected on

    The rule set holds a tracker for every rule that was ever a candidate; only
    trackers with in_set = True belong to the mined set A. It also keeps the global
    per-symbol occurrence counters and the premise counts required for the
    confidence of conjunctive rules.

    :param str method: mining method that produced the set ("brm", "frm", ...)
    :param int dataset_size: |D| of the mined dataset
    """

    def __init__(self, method: str = "brm", dataset_size: int = 0):
        """
        Constructor
        """
        self.method = method
        self.dataset_size = dataset_size
        self.trackers = {}
        self.conclusion_counts = Counter()
        self.premise_counts = {}
        self.params = None
        self.events_touched = 0
        self.itemsets = []
        self.lifts = {}

    def tracker(self, rule: Rule, prior: float = 0.5) -> RuleTracker:
        """
        Returns the tracker of a rule, creating it on first sight

        :param Rule rule: rule
        :param float prior: initial belief of a new tracker
        :return: tracker of the rule
        :rtype: RuleTracker
        """
        if rule not in self.trackers:
            self.trackers[rule] = RuleTracker(rule=rule, belief=prior)
        return self.trackers[rule]

    def add(self, tracker: RuleTracker):
        """
        Adds a finished tracker, e.g. from conjunctive or frequent mining

        :param RuleTracker tracker: tracker to add
        """
        self.trackers[tracker.rule] = tracker

    def premise_count(self, rule: Rule) -> int:
        """
        Number of premise observations #a of a rule

        :param Rule rule: rule
        :return: premise count
        :rtype: int
        """
        if rule.premise in self.premise_counts:
            return self.premise_counts[rule.premise]
        if len(rule.premise) == 1:
            return self.conclusion_counts[rule.premise[0]]
        raise KeyError(f"No premise count recorded for {rule}")

    def in_set_trackers(self) -> list[RuleTracker]:
        """
        Trackers of retained rules in canonical order

        :return: retained trackers
        :rtype: list
        """
        trackers = [t for t in self.trackers.values() if t.in_set]
        return sorted(trackers, key=lambda t: t.rule.sort_key)

    @property
    def rules(self) -> list[Rule]:
        return [t.rule for t in self.in_set_trackers()]

    def __contains__(self, rule: Rule) -> bool:
        return rule in self.trackers and self.trackers[rule].in_set

    def __iter__(self) -> Iterator[RuleTracker]:
        return iter(self.in_set_trackers())

    def __len__(self) -> int:
        return sum(1 for t in self.trackers.values() if t.in_set)

    def __repr__(self):
        return (
            f"RuleSet(method={self.method!r}, rules={len(self)}, "
            f"candidates={len(self.trackers)}, dataset_size={self.dataset_size})"
        )
