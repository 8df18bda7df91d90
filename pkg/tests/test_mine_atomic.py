import random

import pytest

from beliefminer.components import MiningParams, Rule, RuleSet
from beliefminer.data_management import Dataset, Event, Record
from beliefminer.data_preprocessing import GeneratorConfig, generate_timeseries
from beliefminer.experiments import categorize_rules
from beliefminer.rule_mining import (
    MiningError,
    ObservationWindow,
    cross_check_rules,
    iterate_windows,
    mine_atomic,
    select_candidate_rules,
    window_ends,
)
from tests.utilities import (
    ORDER_FIXTURE,
    brute_force_database_counts,
    brute_force_window_counts,
    make_database,
    make_random_records,
    oracle_rules,
)

PRIORS = (0.01, 0.3, 0.5, 0.99)


def make_random_stream(rng: random.Random) -> list:
    return [rng.randrange(4) for _ in range(rng.randint(2, 60))]


@pytest.mark.brm
def test_select_candidate_rules():
    """
    Tests select_candidate_rules
    - window head is paired with every distinct later symbol
    - a record yields all ordered pairs
    """
    window = ObservationWindow(start_index=0, symbols=(10, 2, 0, 0, 11))
    assert select_candidate_rules(window) == {
        Rule.atomic(10, 2),
        Rule.atomic(10, 0),
        Rule.atomic(10, 11),
    }
    assert select_candidate_rules(Record(("a",))) == set()
    assert len(select_candidate_rules(Record(("a", "b", "c")))) == 6

    window = ObservationWindow(start_index=0, symbols=(1, 2, 1))
    assert Rule.atomic(1, 1) in select_candidate_rules(window, self_rules=True)
    assert Rule.atomic(1, 1) not in select_candidate_rules(window)


@pytest.mark.brm
def test_window_ends():
    """
    Tests window_ends
    - symbol windows hold ow symbols and are truncated at the end of the stream
    - time windows hold the events with t < t_head + ow
    - windows never cross entity segments
    """
    dataset = Dataset.from_symbols(list("abcde"))
    assert window_ends(dataset, MiningParams(ow=3)).tolist() == [3, 4, 5, 5, 5]

    events = [Event("a", 0), Event("b", 1), Event("a", 5), Event("b", 6)]
    dataset = Dataset("timeseries", events=events)
    params = MiningParams(ow=2, window_unit="time")
    assert window_ends(dataset, params).tolist() == [2, 2, 4, 4]

    events = [Event(s, i, "A") for i, s in enumerate("ab")] + [
        Event(s, i, "B") for i, s in enumerate("cd")
    ]
    dataset = Dataset("timeseries", events=events)
    windows = list(iterate_windows(dataset, MiningParams(ow=5)))
    assert [w.symbols for w in windows] == [("a", "b"), ("b",), ("c", "d"), ("d",)]


@pytest.mark.brm
def test_mine_atomic_lost_belief():
    """
    Tests that a rule observed once before its conclusion keeps occurring is not
    retained
    """
    dataset = Dataset.from_symbols(["a", "b", "b", "b", "b"])
    ruleset = mine_atomic(dataset, MiningParams(ow=5))
    tracker = ruleset.trackers[Rule.atomic("a", "b")]
    assert tracker.rule_count == 1
    assert ruleset.conclusion_counts["b"] == 4
    assert Rule.atomic("a", "b") not in ruleset


@pytest.mark.brm
def test_cross_check_rules():
    """
    Tests cross_check_rules on trackers retained during the pass
    """
    ruleset = RuleSet()
    lost = ruleset.tracker(Rule.atomic("a", "b"))
    lost.rule_count, lost.in_set = 1, True
    kept = ruleset.tracker(Rule.atomic("c", "d"))
    kept.rule_count, kept.in_set = 3, True
    ruleset.conclusion_counts.update({"b": 4, "d": 3})

    cross_check_rules(ruleset, 1.0)
    assert ruleset.rules == [Rule.atomic("c", "d")]
    assert lost.conclusion_count == 4


@pytest.mark.brm
def test_mine_atomic_identical_records():
    """
    Tests mining identical records: both directions are retained and saturated
    """
    ruleset = mine_atomic(
        make_database([("a", "b")] * 5), MiningParams(mode="database")
    )
    assert ruleset.rules == [Rule.atomic("a", "b"), Rule.atomic("b", "a")]
    assert all(t.belief == 1.0 for t in ruleset)
    assert ruleset.events_touched == 5


@pytest.mark.brm
def test_mine_atomic_proof_of_concept():
    """
    Tests mining a generated stream
    - chain transitions are retained
    - no rule from a chain symbol to a random symbol is retained
    - every event is counted once
    """
    cfg = GeneratorConfig(seed=7)
    dataset = generate_timeseries(cfg)
    ruleset = mine_atomic(dataset, MiningParams(ow=10))

    assert Rule.atomic(10, 11) in ruleset
    assert Rule.atomic(11, 12) in ruleset
    assert categorize_rules(ruleset, cfg).extracted["R_cr"] == 0
    assert ruleset.events_touched == dataset.size == 1060


@pytest.mark.brm
def test_mine_atomic_database_oracle():
    """
    Tests on 50 random databases that the retained rules and all rule counts equal
    a brute-force recount of the records
    """
    rng = random.Random(0)
    for _ in range(50):
        records = make_random_records(rng)
        ruleset = mine_atomic(make_database(records), MiningParams(mode="database"))
        rule_counts, symbol_counts = brute_force_database_counts(records)

        assert set(ruleset.rules) == oracle_rules(rule_counts, symbol_counts)
        for rule, tracker in ruleset.trackers.items():
            key = (rule.premise[0], rule.conclusion[0])
            assert tracker.rule_count == rule_counts[key]
        assert ruleset.conclusion_counts == symbol_counts


@pytest.mark.brm
def test_mine_atomic_timeseries_oracle():
    """
    Tests on 50 random streams that retained rules and rule counts equal a
    brute-force pairing of window heads with the earliest unpaired occurrences,
    with and without self-rules
    """
    rng = random.Random(1)
    for i in range(50):
        symbols = make_random_stream(rng)
        ow = rng.randint(2, 6)
        self_rules = i % 2 == 0
        params = MiningParams(ow=ow, self_rules=self_rules)
        ruleset = mine_atomic(Dataset.from_symbols(symbols), params)
        rule_counts, symbol_counts = brute_force_window_counts(
            symbols, ow, self_rules
        )

        assert set(ruleset.rules) == oracle_rules(rule_counts, symbol_counts)
        for rule, tracker in ruleset.trackers.items():
            key = (rule.premise[0], rule.conclusion[0])
            assert tracker.rule_count == rule_counts[key]
        if not self_rules:
            assert not any(rule.is_self_rule for rule in ruleset.trackers)


@pytest.mark.brm
def test_mine_atomic_prior_invariance():
    """
    Tests on 50 random datasets that the retained rules do not depend on the prior
    """
    rng = random.Random(2)
    for i in range(50):
        if i % 2:
            dataset = make_database(make_random_records(rng))
            base = MiningParams(mode="database")
        else:
            dataset = Dataset.from_symbols(make_random_stream(rng))
            base = MiningParams(ow=rng.randint(2, 6))
        rule_sets = {
            tuple(mine_atomic(dataset, base.with_updates(prior=p)).rules)
            for p in PRIORS
        }
        assert len(rule_sets) == 1


@pytest.mark.brm
def test_mine_atomic_order_independence():
    """
    Tests that the retained rules and their counts do not depend on the order of
    the records (100 permutations)
    """
    params = MiningParams(mode="database")
    expected = mine_atomic(make_database(ORDER_FIXTURE), params)
    expected_counts = {t.rule: t.rule_count for t in expected}

    rng = random.Random(3)
    for _ in range(100):
        records = list(ORDER_FIXTURE)
        rng.shuffle(records)
        ruleset = mine_atomic(make_database(records), params)
        assert ruleset.rules == expected.rules
        assert {t.rule: t.rule_count for t in ruleset} == expected_counts


@pytest.mark.brm
def test_mine_atomic_selector_zero_keeps_all_candidates():
    """
    Tests that every observed candidate is retained at s = 0
    """
    dataset = make_database(make_random_records(random.Random(4)))
    ruleset = mine_atomic(dataset, MiningParams(mode="database", selector=0.0))
    assert len(ruleset) == len(ruleset.trackers)


@pytest.mark.brm
def test_mine_atomic_time_windows():
    """
    Tests that windows in time units only pair events closer than ow
    """
    events = [Event("a", 0), Event("b", 1), Event("a", 5), Event("b", 6)]
    dataset = Dataset("timeseries", events=events)

    by_time = mine_atomic(dataset, MiningParams(ow=2, window_unit="time"))
    assert by_time.rules == [Rule.atomic("a", "b")]
    assert by_time.trackers[Rule.atomic("a", "b")].rule_count == 2

    by_symbols = mine_atomic(dataset, MiningParams(ow=2))
    assert Rule.atomic("b", "a") in by_symbols


@pytest.mark.brm
def test_mine_atomic_entity_segments():
    """
    Tests that rules are not paired across entity segments
    """
    events = [Event(s, i, "A") for i, s in enumerate("ab")] + [
        Event(s, i, "B") for i, s in enumerate("cd")
    ]
    ruleset = mine_atomic(Dataset("timeseries", events=events), MiningParams(ow=5))
    assert ruleset.rules == [Rule.atomic("a", "b"), Rule.atomic("c", "d")]


@pytest.mark.brm
def test_mine_atomic_errors():
    """
    Tests mining errors
    - no dataset
    - timeseries without observation window
    - dataset and parameters in different modes
    """
    dataset = Dataset.from_symbols([0, 1, 2])
    with pytest.raises(MiningError) as err:
        mine_atomic(None, MiningParams(ow=3))
    assert err.value.category == "E_EMPTY"

    with pytest.raises(MiningError) as err:
        mine_atomic(dataset, MiningParams())
    assert err.value.category == "E_CONFIG"

    with pytest.raises(MiningError) as err:
        mine_atomic(dataset, MiningParams(mode="database"))
    assert err.value.category == "E_CONFIG"

    with pytest.raises(ValueError):
        Dataset.from_symbols([])
