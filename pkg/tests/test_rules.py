import pytest

from beliefminer.components import (
    ConfigurationError,
    MiningParams,
    Rule,
    RuleSet,
    RuleTracker,
    sort_symbols,
)


@pytest.mark.core_model
def test_rule_canonical_form():
    """
    Tests Rule
    - premise and conclusion are sorted and deduplicated
    - integers sort before strings
    - atomic and self-rule flags
    """
    rule = Rule(("c", "a", "b", "a"), ("d",))
    assert rule.premise == ("a", "b", "c")
    assert rule == Rule(("b", "c", "a"), ("d",))
    assert not rule.is_atomic

    assert sort_symbols(["b", 10, 2, "a"]) == (2, 10, "a", "b")

    assert Rule.atomic(10, 11).is_atomic
    assert Rule.atomic(0, 0).is_self_rule
    assert str(Rule(("a", "b"), ("d",))) == "a, b -> d"


@pytest.mark.core_model
def test_rule_validation():
    """
    Tests that empty and overlapping rules are rejected
    """
    with pytest.raises(ValueError):
        Rule((), ("a",))
    with pytest.raises(ValueError):
        Rule(("a",), ())
    with pytest.raises(ValueError):
        Rule(("a", "b"), ("b",))


@pytest.mark.core_model
def test_rule_tracker_pairs_each_occurrence_once():
    """
    Tests that a conclusion occurrence increments the rule count only once
    """
    tracker = RuleTracker(rule=Rule.atomic("a", "b"))
    assert tracker.pair(4)
    assert not tracker.pair(4)
    assert tracker.pair(7)
    assert tracker.rule_count == 2


@pytest.mark.core_model
def test_rule_set():
    """
    Tests RuleSet
    - trackers are created once with the prior
    - only retained rules are iterated, in canonical order
    - premise counts of atomic and conjunctive rules
    """
    ruleset = RuleSet(dataset_size=10)
    tracker = ruleset.tracker(Rule.atomic("b", "a"), prior=0.3)
    assert tracker.belief == 0.3
    assert ruleset.tracker(Rule.atomic("b", "a")) is tracker

    tracker.in_set = True
    ruleset.tracker(Rule.atomic("a", "c")).in_set = True
    ruleset.tracker(Rule.atomic("a", "b"))

    assert len(ruleset) == 2
    assert ruleset.rules == [Rule.atomic("a", "c"), Rule.atomic("b", "a")]
    assert Rule.atomic("a", "b") not in ruleset
    assert Rule.atomic("b", "a") in ruleset

    ruleset.conclusion_counts.update({"a": 4, "b": 6})
    assert ruleset.premise_count(Rule.atomic("b", "a")) == 6
    conjunctive = Rule(("a", "b"), ("c",))
    with pytest.raises(KeyError):
        ruleset.premise_count(conjunctive)
    ruleset.premise_counts[conjunctive.premise] = 3
    assert ruleset.premise_count(conjunctive) == 3


@pytest.mark.core_model
def test_mining_params_validation():
    """
    Tests MiningParams
    - defaults are valid
    - priors at 0 or 1, selectors outside [0, 1], short windows and unknown modes
      are rejected
    - integral windows in symbols are stored as int
    """
    params = MiningParams(ow=10.0)
    assert params.ow == 10
    assert isinstance(params.ow, int)
    assert params.with_updates(selector=0.5).selector == 0.5
    assert MiningParams(ow=2.5, window_unit="time").ow == 2.5

    for changes in (
        {"prior": 0.0},
        {"prior": 1.0},
        {"selector": 1.5},
        {"selector": -0.1},
        {"ow": 1},
        {"ow": 2.5},
        {"mode": "graph"},
        {"window_unit": "days"},
        {"minsup": 0.0},
        {"confidence_threshold": -1},
    ):
        with pytest.raises(ConfigurationError):
            MiningParams(**changes)

    assert MiningParams().as_dict()["mode"] == "timeseries"
