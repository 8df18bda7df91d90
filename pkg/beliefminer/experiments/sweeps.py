from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

import numpy as np
import pandas as pd

from ..components.belief import passes_criterion
from ..components.parameters import MiningParams
from ..data_management.dataset import Dataset
from ..data_preprocessing.synthetic_data import GeneratorConfig, generate_timeseries
from ..rule_mining.mine_atomic import mine_atomic
from .categories import CATEGORIES, categorize_rules, extraction_rate
import logging

log = logging.getLogger(__name__)


def derive_seed(base_seed: int, value, run: int) -> int:
    """
    Seed of run `run` at parameter value `value`

    :param int base_seed: seed of the sweep
    :param value: parameter value (integer or real)
    :param int run: run index
    :return: derived seed
    :rtype: int
    """
    value_key = int(round(float(value) * 1_000_000))
    sequence = np.random.SeedSequence([base_seed, value_key, run])
    return int(sequence.generate_state(1)[0])


def _ow_values(ow_range) -> list[int]:
    if isinstance(ow_range, tuple) and len(ow_range) == 2:
        return list(range(ow_range[0], ow_range[1] + 1))
    return [int(ow) for ow in ow_range]


def _ow_cell(args: tuple) -> tuple:
    ow, run, cfg, params, base_seed = args
    run_cfg = replace(cfg, seed=derive_seed(base_seed, ow, run))
    dataset = generate_timeseries(run_cfg)
    ruleset = mine_atomic(dataset, params.with_updates(mode="timeseries", ow=ow))
    counts = categorize_rules(ruleset, cfg)
    rates = {}
    for category in CATEGORIES:
        if counts.denominators[category] > 0:
            rates[category] = extraction_rate(counts, category)
    return ow, run, rates


def ow_sweep(
    ow_range=(2, 500),
    runs_per_ow: int = 100,
    cfg: GeneratorConfig = None,
    params: MiningParams = None,
    base_seed: int = None,
    n_jobs: int = 1,
) -> pd.DataFrame:
    """
    Extraction rates per rule category over observation window sizes

    For every window size, runs_per_ow timeseries are generated (run i at size v
    uses seed derive_seed(base_seed, v, i)) and mined. The table holds the mean and
    the minimum extraction rate of every category over the runs.

    :param ow_range: inclusive (first, last) tuple, or an iterable of window sizes
    :param int runs_per_ow: generated timeseries per window size
    :param GeneratorConfig cfg: generator configuration
    :param MiningParams params: mining parameters (ow is overwritten)
    :param int base_seed: seed of the sweep, the generator seed if not given
    :param int n_jobs: number of worker processes
    :return: table with one row per window size
    :rtype: pd.DataFrame
    """
    cfg = cfg or GeneratorConfig()
    params = params or MiningParams(ow=2)
    base_seed = cfg.seed if base_seed is None else base_seed
    ow_values = _ow_values(ow_range)

    tasks = [
        (ow, run, cfg, params, base_seed)
        for ow in ow_values
        for run in range(runs_per_ow)
    ]
    log_msg = f"Observation window sweep: {len(ow_values)} sizes, {len(tasks)} runs"
    log.info(log_msg)

    if n_jobs > 1:
        with ProcessPoolExecutor(max_workers=n_jobs) as executor:
            results = list(executor.map(_ow_cell, tasks, chunksize=16))
    else:
        results = [_ow_cell(task) for task in tasks]

    rows = [{"ow": ow, "run": run, **rates} for ow, run, rates in results]
    runs = pd.DataFrame(rows)
    categories = [c for c in CATEGORIES if c in runs.columns]
    grouped = runs.groupby("ow")[categories]
    table = pd.concat(
        [grouped.mean().add_prefix("mean_"), grouped.min().add_prefix("min_")], axis=1
    )
    columns = [f"{stat}_{c}" for c in categories for stat in ("mean", "min")]
    return table[columns].reset_index().sort_values("ow", ignore_index=True)


def selector_sweep(
    dataset: Dataset, params: MiningParams, s_samples: int = 200
) -> pd.DataFrame:
    """
    Number of extracted rules over equidistant selector values in [0, 1]

    Rule and conclusion counts do not depend on the selector and the final rule set
    is decided on the final counts, so the data is mined once at s = 0 and every
    candidate is tested at each selector value.

    :param Dataset dataset: dataset
    :param MiningParams params: mining parameters (selector is overwritten)
    :param int s_samples: number of selector values
    :return: table with columns s and rules
    :rtype: pd.DataFrame
    """
    if s_samples < 2:
        raise ValueError("A selector sweep needs at least two samples")
    ruleset = mine_atomic(dataset, params.with_updates(selector=0.0))
    counts = [
        (t.rule_count, ruleset.conclusion_counts[t.rule.conclusion[0]])
        for t in ruleset.trackers.values()
        if t.rule_count > 0
    ]

    rows = []
    for s in np.linspace(0.0, 1.0, s_samples):
        extracted = sum(passes_criterion(r, b, float(s)) for r, b in counts)
        rows.append({"s": float(s), "rules": extracted})

    log_msg = (
        f"Selector sweep: {rows[0]['rules']} rules at s=0, {rows[-1]['rules']} at s=1"
    )
    log.info(log_msg)
    return pd.DataFrame(rows)
