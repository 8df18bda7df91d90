from collections import Counter
from dataclasses import dataclass
from typing import Iterable

import numpy as np
import pandas as pd
from mlxtend.frequent_patterns import apriori

from ..components.parameters import MiningParams
from ..components.rule import Rule, RuleSet, RuleTracker, sort_symbols, Symbol
from ..data_management.dataset import Dataset, TIMESERIES
from .utilities import MiningError, get_transactions
import logging

log = logging.getLogger(__name__)

# Relative slack when comparing supports against minsup
SUPPORT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class FrequentItemset:
    """
    Symbol set whose support reaches the minimum support
    """

    symbols: frozenset
    support: float

    @property
    def sort_key(self) -> tuple:
        return len(self.symbols), [str(s) for s in sort_symbols(self.symbols)]


class TransactionMatrix:
    """
    One-hot encoded transactions

    Columns 0..m-1 flag the symbols on the premise side, columns m..2m-1 those on
    the conclusion side. For a database both halves are identical.

    :param Dataset dataset: dataset to encode
    :param MiningParams params: parameters holding ow (timeseries only)
    """

    def __init__(self, dataset: Dataset, params: MiningParams = None):
        """
        Constructor
        """
        transactions = get_transactions(dataset, params)
        self.mode = dataset.mode
        self.vocabulary = dataset.vocabulary()
        self.size = len(transactions)
        index = {symbol: i for i, symbol in enumerate(self.vocabulary)}
        m = len(self.vocabulary)

        premise = np.zeros((self.size, m), dtype=bool)
        conclusion = np.zeros((self.size, m), dtype=bool)
        for row, (premise_side, conclusion_side) in enumerate(transactions):
            premise[row, [index[s] for s in premise_side]] = True
            conclusion[row, [index[s] for s in conclusion_side]] = True
        self.premise = premise
        self.conclusion = conclusion
        self.index = index

    def symbol_counts(self) -> Counter:
        """
        Premise-side count of every symbol: records containing it, or windows headed
        by it (its number of occurrences)
        """
        return Counter(dict(zip(self.vocabulary, self.premise.sum(axis=0).tolist())))

    def rule_counts(self) -> np.ndarray:
        """
        Matrix of co-occurrence counts, entry [a, b] counts transactions holding a
        on the premise side and b on the conclusion side
        """
        counts = self.premise.T.astype(np.int64) @ self.conclusion.astype(np.int64)
        if self.mode != TIMESERIES:
            np.fill_diagonal(counts, 0)
        return counts

    def to_frame(self) -> pd.DataFrame:
        """
        Boolean frame for apriori; a database only needs one half
        """
        if self.mode != TIMESERIES:
            return pd.DataFrame(self.premise)
        return pd.DataFrame(np.hstack([self.premise, self.conclusion]))


def support(itemset_or_rule: Rule | Iterable[Symbol], dataset: Dataset, params=None):
    """
    Support of a rule or symbol set: occurrence count divided by the number of
    transactions

    In a timeseries, a symbol occurs in the windows it heads, and an atomic rule
    a -> b in the windows headed by a that contain b.

    :param itemset_or_rule: Rule or iterable of symbols
    :param Dataset dataset: dataset
    :param MiningParams params: parameters holding ow (timeseries only)
    :return: support in [0, 1]
    :rtype: float
    """
    transactions = get_transactions(dataset, params)
    if isinstance(itemset_or_rule, Rule):
        premise = set(itemset_or_rule.premise)
        conclusion = set(itemset_or_rule.conclusion)
        if dataset.mode == TIMESERIES and not itemset_or_rule.is_atomic:
            raise ValueError("Timeseries support is defined for atomic rules only")
        count = sum(
            1 for p, c in transactions if premise <= p and conclusion <= c
        )
    else:
        itemset = set(itemset_or_rule)
        if dataset.mode == TIMESERIES and len(itemset) != 1:
            raise ValueError("Timeseries support is defined for single symbols only")
        count = sum(1 for p, _ in transactions if itemset <= p)
    return count / len(transactions)


def lift(rule: Rule, dataset: Dataset, params: MiningParams = None) -> float:
    """
    Lift of a rule: confidence divided by the support of the conclusion

    :param Rule rule: rule
    :param Dataset dataset: dataset
    :param MiningParams params: parameters holding ow (timeseries only)
    :return: lift
    :rtype: float
    """
    conclusion_support = support(rule.conclusion, dataset, params)
    if conclusion_support == 0:
        raise ValueError(f"Conclusion of {rule} never occurs, lift is undefined")
    premise_support = support(rule.premise, dataset, params)
    if premise_support == 0:
        raise ValueError(f"Premise of {rule} never occurs, confidence is undefined")
    confidence = support(rule, dataset, params) / premise_support
    return confidence / conclusion_support


def _decode_itemset(columns: frozenset, matrix: TransactionMatrix):
    """
    Splits apriori column indices into premise-side and conclusion-side symbols
    """
    m = len(matrix.vocabulary)
    premise = [matrix.vocabulary[c] for c in columns if c < m]
    conclusion = [matrix.vocabulary[c - m] for c in columns if c >= m]
    return premise, conclusion


def mine_frm(
    dataset: Dataset,
    minsup: float,
    params: MiningParams = None,
    min_lift: float = None,
) -> RuleSet:
    """
    Frequent rule mining baseline

    Frequent itemsets up to size two are generated breadth first with downward
    closure pruning (apriori), atomic rules a -> b are emitted for every frequent
    pair. Each rule carries its support, confidence and lift.

    :param Dataset dataset: timeseries or database
    :param float minsup: minimum support in (0, 1]
    :param MiningParams params: parameters holding ow (timeseries only)
    :param float min_lift: if given, only rules with lift > min_lift are kept
    :return: rule set of frequent rules
    :rtype: RuleSet
    """
    if not 0 < minsup <= 1:
        raise MiningError("E_CONFIG", "Minimum support needs to be in (0, 1]")
    if dataset.mode == TIMESERIES and (params is None or params.ow is None):
        raise MiningError(
            "E_CONFIG", "An observation window (ow) is required in timeseries mode"
        )

    matrix = TransactionMatrix(dataset, params)
    n = matrix.size
    symbol_counts = matrix.symbol_counts()
    rule_counts = matrix.rule_counts()

    ruleset = RuleSet(method="frm", dataset_size=n)
    ruleset.params = params
    ruleset.conclusion_counts = Counter(
        {s: c for s, c in symbol_counts.items() if c > 0}
    )

    frequent = apriori(
        matrix.to_frame(),
        min_support=minsup * (1 - SUPPORT_TOLERANCE),
        use_colnames=False,
        max_len=2,
    )

    for columns, itemset_support in zip(frequent["itemsets"], frequent["support"]):
        premise, conclusion = _decode_itemset(columns, matrix)
        if dataset.mode != TIMESERIES:
            ruleset.itemsets.append(
                FrequentItemset(frozenset(premise), float(itemset_support))
            )
            pairs = [(a, b) for a in premise for b in premise if a != b]
        elif len(premise) == 1 and not conclusion:
            ruleset.itemsets.append(
                FrequentItemset(frozenset(premise), float(itemset_support))
            )
            pairs = []
        elif len(premise) == 1 and len(conclusion) == 1:
            pairs = [(premise[0], conclusion[0])]
        else:
            # conclusion-side only itemsets are no rules
            pairs = []

        for a, b in pairs:
            rule = Rule.atomic(a, b)
            count = int(rule_counts[matrix.index[a], matrix.index[b]])
            confidence = count / symbol_counts[a]
            rule_lift = confidence / (symbol_counts[b] / n)
            if min_lift is not None and not rule_lift > min_lift:
                continue
            ruleset.add(
                RuleTracker(
                    rule=rule,
                    rule_count=count,
                    conclusion_count=symbol_counts[b],
                    belief=float("nan"),
                    in_set=True,
                )
            )
            ruleset.lifts[rule] = rule_lift

    ruleset.itemsets.sort(key=lambda i: i.sort_key)
    log_msg = (
        f"Frequent rule mining with minsup {minsup}: {len(ruleset.itemsets)} "
        f"frequent itemsets, {len(ruleset)} rules"
    )
    log.info(log_msg)
    return ruleset


def candidate_rule_supports(
    dataset: Dataset, params: MiningParams = None
) -> dict[Rule, float]:
    """
    Support of every atomic rule occurring at least once, without pruning

    :param Dataset dataset: dataset
    :param MiningParams params: parameters holding ow (timeseries only)
    :return: dict rule -> support
    :rtype: dict
    """
    matrix = TransactionMatrix(dataset, params)
    counts = matrix.rule_counts()
    supports = {}
    for i, j in zip(*np.nonzero(counts)):
        rule = Rule.atomic(matrix.vocabulary[i], matrix.vocabulary[j])
        supports[rule] = counts[i, j] / matrix.size
    return supports


def minsup_for_rule_count(
    dataset: Dataset, target: int, params: MiningParams = None
) -> float:
    """
    Minimum support at which frequent rule mining returns (at least) a target
    number of rules

    Candidate supports are sorted in descending order and the support of the
    target-th rule is returned; rules tied with it are all kept, so the resulting
    count can exceed the target.

    :param Dataset dataset: dataset
    :param int target: target number of rules
    :param MiningParams params: parameters holding ow (timeseries only)
    :return: minimum support
    :rtype: float
    """
    if target < 1:
        raise ValueError(f"Target rule count needs to be positive, got {target}")
    supports = sorted(candidate_rule_supports(dataset, params).values(), reverse=True)
    if not supports:
        raise MiningError("E_EMPTY", "The dataset holds no candidate rules")
    minsup = float(supports[min(target, len(supports)) - 1])

    log_msg = (
        f"Minimum support {minsup:.6f} selects "
        f"{sum(s >= minsup for s in supports)} rules (target {target})"
    )
    log.info(log_msg)
    return minsup
