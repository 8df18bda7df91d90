import random

import numpy as np
import pytest

from beliefminer.components import MiningParams, Rule
from beliefminer.data_preprocessing import GeneratorConfig, generate_timeseries
from beliefminer.experiments import (
    CATEGORIES,
    CategoryCounts,
    categorize_rule,
    categorize_rules,
    derive_seed,
    extraction_rate,
    ow_sweep,
    selector_sweep,
)
from beliefminer.routines import PipelineConfig, run_pipeline
from beliefminer.rule_mining import mine_atomic, mine_frm, support
from tests.utilities import FIVE_RULE_DATABASE, make_database

CFG = GeneratorConfig()
WINDOW = MiningParams(ow=10)


@pytest.mark.synthetic
def test_generator_defaults():
    """
    Tests generate_timeseries with the default configuration
    - stream length 1000 + 20 * 3
    - every random symbol is drawn from the random vocabulary
    - chain symbols appear in chain order with gaps inside the gap range
    """
    dataset = generate_timeseries(CFG)
    symbols = dataset.symbols
    assert len(symbols) == CFG.stream_length == 1060
    assert [e.t for e in dataset.events] == list(range(1060))

    chain_positions = [i for i, s in enumerate(symbols) if s in CFG.chain]
    assert sum(1 for s in symbols if s in CFG.v_random) == 1000
    assert [symbols[i] for i in chain_positions] == list(CFG.chain) * 20
    for i in range(0, len(chain_positions), 3):
        first, second, third = chain_positions[i : i + 3]
        assert 1 <= second - first <= 10
        assert 1 <= third - second <= 10


@pytest.mark.synthetic
def test_generator_determinism():
    """
    Tests that identical seeds give identical streams and different seeds differ
    """
    assert generate_timeseries(CFG) == generate_timeseries(CFG)
    other = GeneratorConfig(seed=1)
    assert generate_timeseries(CFG).symbols != generate_timeseries(other).symbols


@pytest.mark.synthetic
def test_generator_options():
    """
    Tests generator options and errors
    - without chains only random symbols are emitted
    - gaps of 1 place chains contiguously
    - infeasible packing and invalid configurations are errors
    """
    no_chains = generate_timeseries(GeneratorConfig(n_chains=0, n_random=50))
    assert set(no_chains.symbols) <= set(CFG.v_random)
    assert no_chains.size == 50

    tight = generate_timeseries(GeneratorConfig(n_random=200, gap_range=(1, 1)))
    text = ",".join(str(s) for s in tight.symbols)
    assert text.count("10,11,12") == 20

    with pytest.raises(ValueError):
        generate_timeseries(GeneratorConfig(n_random=0, n_chains=5, gap_range=(5, 5)))
    with pytest.raises(ValueError):
        GeneratorConfig(v_random=(0, 10))
    with pytest.raises(ValueError):
        GeneratorConfig(gap_range=(0, 3))
    with pytest.raises(ValueError):
        GeneratorConfig(v_random=())


@pytest.mark.synthetic
def test_categorize_rule():
    """
    Tests categorize_rule and the category sizes of the default configuration
    """
    assert categorize_rule(Rule.atomic(10, 11), CFG) == "R_c"
    assert categorize_rule(Rule.atomic(2, 10), CFG) == "R_rc"
    assert categorize_rule(Rule.atomic(10, 2), CFG) == "R_cr"
    assert categorize_rule(Rule.atomic(12, 10), CFG) == "R_cv"
    assert categorize_rule(Rule.atomic(10, 10), CFG) == "R_cv"
    assert categorize_rule(Rule.atomic(0, 0), CFG) == "R_r"
    assert categorize_rule(Rule.atomic(0, 99), CFG) == "other"
    assert categorize_rule(Rule((0, 1), (10,)), CFG) == "other"

    counts = CategoryCounts.for_config(CFG)
    assert counts.denominators == {
        "R_r": 16,
        "R_c": 2,
        "R_rc": 12,
        "R_cr": 12,
        "R_cv": 7,
    }


@pytest.mark.synthetic
def test_extraction_rate():
    """
    Tests extraction_rate
    - all and none of a category
    - random rule lists against a set intersection
    - unknown categories are an error
    """
    counts = categorize_rules([Rule.atomic(10, 11), Rule.atomic(11, 12)], CFG)
    assert extraction_rate(counts, "R_c") == 100.0
    assert extraction_rate(counts, "R_cr") == 0.0

    symbols = list(CFG.v_random + CFG.chain)
    r_rc = {Rule.atomic(a, b) for a in CFG.v_random for b in CFG.chain}
    rng = random.Random(14)
    for _ in range(20):
        rules = {
            Rule.atomic(rng.choice(symbols), rng.choice(symbols)) for _ in range(30)
        }
        counts = categorize_rules(rules, CFG)
        expected = 100 * len(rules & r_rc) / len(r_rc)
        assert extraction_rate(counts, "R_rc") == pytest.approx(expected)
        assert sum(counts.extracted.values()) + counts.other == len(rules)

    with pytest.raises(ValueError):
        extraction_rate(counts, "R_x")


@pytest.mark.synthetic
def test_derive_seed():
    """
    Tests that derived seeds are reproducible and differ across cells
    """
    assert derive_seed(0, 10, 3) == derive_seed(0, 10, 3)
    seeds = {derive_seed(0, ow, run) for ow in range(2, 12) for run in range(10)}
    assert len(seeds) == 100
    assert derive_seed(1, 10, 3) != derive_seed(0, 10, 3)


@pytest.mark.synthetic
def test_proof_of_concept_rates():
    """
    Tests on 10 generated streams at ow = 10
    - every random symbol rule and every chain transition is extracted
    - no rule from a chain symbol to a random symbol is extracted
    - the confidence filter separates the two processes
    - frequent mining at minsup 0.1 misses the chain, whose support stays below
      0.03
    """
    confidence = PipelineConfig(params=WINDOW, filter="confidence", threshold=0.5)
    for seed in range(10):
        cfg = GeneratorConfig(seed=seed)
        dataset = generate_timeseries(cfg)
        counts = categorize_rules(mine_atomic(dataset, WINDOW), cfg)
        assert extraction_rate(counts, "R_r") == 100.0
        assert extraction_rate(counts, "R_c") == 100.0
        assert extraction_rate(counts, "R_cr") == 0.0

        assert run_pipeline(dataset, confidence) == [(0, 1, 2, 3), (10, 11, 12)]

        frequent = mine_frm(dataset, 0.1, WINDOW)
        assert categorize_rules(frequent, cfg).extracted["R_c"] == 0
        assert all(
            not set(cfg.chain) & set(rule.premise + rule.conclusion)
            for rule in frequent.rules
        )
        assert max(support([s], dataset, WINDOW) for s in cfg.chain) <= 0.03


@pytest.mark.synthetic
@pytest.mark.slow
def test_proof_of_concept_rates_100_runs():
    """
    Tests the extraction rates of the proof of concept over 100 seeds
    """
    for seed in range(100):
        cfg = GeneratorConfig(seed=seed)
        counts = categorize_rules(mine_atomic(generate_timeseries(cfg), WINDOW), cfg)
        assert extraction_rate(counts, "R_r") == 100.0
        assert extraction_rate(counts, "R_c") == 100.0
        assert extraction_rate(counts, "R_cr") == 0.0


@pytest.mark.synthetic
def test_ow_sweep():
    """
    Tests ow_sweep on a small grid
    - one row per window size with mean and min columns per category
    - chain transitions are always found once the window spans the largest gap
    - very short windows miss chain transitions
    - chain to random rules are never found
    - the table is a pure function of its arguments
    """
    table = ow_sweep(ow_range=[2, 3, 11, 20, 50], runs_per_ow=3, base_seed=0)
    assert table["ow"].tolist() == [2, 3, 11, 20, 50]
    assert list(table.columns) == ["ow"] + [
        f"{stat}_{c}" for c in CATEGORIES for stat in ("mean", "min")
    ]

    rates = table.set_index("ow")
    assert (rates.loc[[11, 20, 50], "min_R_c"] == 100.0).all()
    assert (rates.loc[[2, 3], "mean_R_c"] < 100.0).all()
    assert (rates["mean_R_cr"] == 0.0).all()
    assert (rates["min_R_c"] <= rates["mean_R_c"]).all()

    again = ow_sweep(ow_range=[2, 3, 11, 20, 50], runs_per_ow=3, base_seed=0)
    assert table.equals(again)


@pytest.mark.synthetic
@pytest.mark.slow
def test_ow_sweep_desk_scale():
    """
    Tests the window sweep over ow 2..50 with 10 runs per window size
    - every chain rule is extracted once the window covers most gaps (ow >= 8)
    - windows of 6 and 7 lose chain rules in some runs, as gaps reach 10
    - small windows miss chain rules, no rule links the processes
    """
    table = ow_sweep(ow_range=(2, 50), runs_per_ow=10, base_seed=0).set_index("ow")
    assert (table.loc[8:20, "mean_R_c"] == 100.0).all()
    assert (table.loc[[6, 7], "mean_R_c"] >= 50.0).all()
    assert (table.loc[[2, 3], "mean_R_c"] < 100.0).all()
    assert (table["mean_R_cr"] == 0.0).all()


@pytest.mark.synthetic
def test_ow_sweep_chain_only_stream():
    """
    Tests that a window of two never spans a chain transition with gaps above 1
    """
    cfg = GeneratorConfig(v_random=(0,), gap_range=(2, 10))
    table = ow_sweep(ow_range=[2], runs_per_ow=3, cfg=cfg, base_seed=0)
    assert table["mean_R_c"].tolist() == [0.0]


@pytest.mark.synthetic
def test_selector_sweep():
    """
    Tests selector_sweep
    - at s = 0 every candidate rule is extracted
    - the rule count never increases with s
    - at s = 1 exactly the five rules with P(a|b) >= 0.5 of the fixture remain
    - on a generated stream most rules drop out in the lower half of the selector
      range
    """
    dataset = make_database(FIVE_RULE_DATABASE)
    params = MiningParams(mode="database")
    table = selector_sweep(dataset, params, s_samples=200)

    assert len(table) == 200
    assert table["s"].iloc[0] == 0.0
    assert table["s"].iloc[-1] == 1.0
    trackers = mine_atomic(dataset, params.with_updates(selector=0.0)).trackers
    assert table["rules"].iloc[0] == sum(t.rule_count > 0 for t in trackers.values())
    assert table["rules"].iloc[-1] == 5
    assert (np.diff(table["rules"].to_numpy()) <= 0).all()

    stream = generate_timeseries(GeneratorConfig(seed=2))
    table = selector_sweep(stream, WINDOW, s_samples=50)
    counts = table["rules"].to_numpy()
    assert (np.diff(counts) <= 0).all()
    assert counts[-1] == len(mine_atomic(stream, WINDOW))
    # rules from rare chain symbols to frequent random ones drop out at small s
    middle = len(counts) // 2
    assert counts[0] - counts[middle] > counts[middle] - counts[-1]

    with pytest.raises(ValueError):
        selector_sweep(dataset, params, s_samples=1)
