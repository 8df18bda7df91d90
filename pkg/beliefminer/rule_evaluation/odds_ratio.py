import numpy as np

from ..components.parameters import MiningParams
from ..components.rule import Rule
from ..data_management.dataset import Dataset
from ..rule_mining.utilities import get_transactions
from .metrics import ScoredRule
import logging

log = logging.getLogger(__name__)

# Haldane-Anscombe correction added to every cell if any cell is zero
ZERO_CELL_CORRECTION = 0.5


def contingency_table(
    rule: Rule, dataset: Dataset, params: MiningParams = None
) -> np.ndarray:
    """
    2x2 table of premise and conclusion occurrence over the transactions

    Cells are ordered (premise and conclusion, premise only, conclusion only,
    neither). Transactions are records, or observation windows in a timeseries.

    :param Rule rule: rule
    :param Dataset dataset: dataset
    :param MiningParams params: parameters holding ow (timeseries only)
    :return: array [n11, n10, n01, n00]
    :rtype: np.ndarray
    """
    premise = set(rule.premise)
    conclusion = set(rule.conclusion)
    table = np.zeros(4, dtype=np.int64)
    for premise_side, conclusion_side in get_transactions(dataset, params):
        has_premise = premise <= premise_side
        has_conclusion = conclusion <= conclusion_side
        table[2 * (not has_premise) + (not has_conclusion)] += 1
    return table


def odds_ratio_from_table(table) -> np.ndarray | float:
    """
    Odds ratio (n11 * n00) / (n10 * n01) of one table or of a stack of tables

    Tables with a zero cell get the zero-cell correction on every cell.

    :param table: array of shape (4,) or (k, 4)
    :return: odds ratio(s)
    """
    cells = np.asarray(table, dtype=float)
    single = cells.ndim == 1
    cells = np.atleast_2d(cells)
    has_zero = (cells == 0).any(axis=1, keepdims=True)
    cells = np.where(has_zero, cells + ZERO_CELL_CORRECTION, cells)
    ratios = (cells[:, 0] * cells[:, 3]) / (cells[:, 1] * cells[:, 2])
    return float(ratios[0]) if single else ratios


def odds_ratio(rule: Rule, dataset: Dataset, params: MiningParams = None) -> float:
    """
    Odds ratio of premise and conclusion occurrence

    :param Rule rule: rule
    :param Dataset dataset: dataset
    :param MiningParams params: parameters holding ow (timeseries only)
    :return: odds ratio
    :rtype: float
    """
    return odds_ratio_from_table(contingency_table(rule, dataset, params))


def bootstrap_table_ci(
    table, iterations: int = 10000, level: float = 0.95, seed: int = 0
) -> tuple[float, float]:
    """
    Percentile bootstrap confidence interval of the odds ratio of a 2x2 table

    Resampling the transactions with replacement only changes the cell counts, so
    every resample is drawn as a multinomial over the four cells. The interval is
    widened to contain the point estimate.

    :param table: cell counts [n11, n10, n01, n00]
    :param int iterations: number of resamples
    :param float level: confidence level
    :param int seed: seed of the resampling
    :return: (lower, upper) bounds
    :rtype: tuple
    """
    if iterations < 1:
        raise ValueError(f"Bootstrap needs at least one iteration, got {iterations}")
    if not 0 < level < 1:
        raise ValueError(f"Confidence level needs to be in (0, 1), got {level}")
    table = np.asarray(table, dtype=np.int64)
    n = int(table.sum())
    if n == 0:
        raise ValueError("Cannot bootstrap an empty table")

    rng = np.random.default_rng(seed)
    resamples = rng.multinomial(n, table / n, size=iterations)
    ratios = odds_ratio_from_table(resamples)
    lower, upper = np.percentile(ratios, [50 * (1 - level), 50 * (1 + level)])

    point = odds_ratio_from_table(table)
    return float(min(lower, point)), float(max(upper, point))


def bootstrap_ci(
    rule: Rule,
    dataset: Dataset,
    iterations: int = 10000,
    level: float = 0.95,
    seed: int = 0,
    params: MiningParams = None,
) -> tuple[float, float]:
    """
    Percentile bootstrap confidence interval of the odds ratio of a rule,
    resampling records (or windows) with replacement

    :param Rule rule: rule
    :param Dataset dataset: dataset
    :param int iterations: number of resamples
    :param float level: confidence level
    :param int seed: seed of the resampling
    :param MiningParams params: parameters holding ow (timeseries only)
    :return: (lower, upper) bounds
    :rtype: tuple
    """
    table = contingency_table(rule, dataset, params)
    return bootstrap_table_ci(table, iterations, level, seed)


def evaluate_odds_ratios(
    rules: list[ScoredRule],
    dataset: Dataset,
    params: MiningParams = None,
    iterations: int = 10000,
    level: float = 0.95,
    seed: int = 0,
) -> list[ScoredRule]:
    """
    Attaches odds ratio and bootstrap interval to scored rules

    Rule i is resampled with a seed derived from (seed, i).

    :param list rules: scored rules
    :param Dataset dataset: dataset the rules were mined on
    :param MiningParams params: parameters holding ow (timeseries only)
    :param int iterations: number of resamples
    :param float level: confidence level
    :param int seed: base seed
    :return: scored rules with odds ratio
    :rtype: list
    """
    evaluated = []
    for i, rule in enumerate(rules):
        table = contingency_table(rule.rule, dataset, params)
        rule_seed = np.random.SeedSequence([seed, i])
        ci95 = bootstrap_table_ci(table, iterations, level, rule_seed)
        evaluated.append(rule.with_odds_ratio(odds_ratio_from_table(table), ci95))

    log_msg = f"Odds ratios evaluated for {len(evaluated)} rules"
    log.info(log_msg)
    return evaluated
