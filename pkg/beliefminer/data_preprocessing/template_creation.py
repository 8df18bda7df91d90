import json
from pathlib import Path


def initialize_configuration_templates() -> dict:
    """
    Creates a configuration template and returns it as a dict

    :return: configuration_template
    :rtype: dict
    """
    configuration_template = {
        "mining": {
            "mode": {
                "description": "Dataset type: a timestamped symbol stream or a list "
                "of records.",
                "options": ["timeseries", "database"],
                "value": "timeseries",
            },
            "method": {
                "description": "Mining method: Bayesian rule mining (increasing "
                "belief) or frequent rule mining (minimum support).",
                "options": ["brm", "frm"],
                "value": "brm",
            },
            "prior": {
                "description": "Prior belief of a new rule, in (0, 1). Does not "
                "affect which rules are selected.",
                "value": 0.5,
            },
            "selector": {
                "description": "Selector s in [0, 1] weighting conclusion "
                "observations without the premise. 1 is the increasing belief "
                "criterion, 0 accepts every candidate rule.",
                "value": 1.0,
            },
            "observation_window": {
                "description": "Observation window (timeseries only), in symbols or "
                "time units.",
                "value": 10,
            },
            "window_unit": {
                "description": "Unit of the observation window.",
                "options": ["symbols", "time"],
                "value": "symbols",
            },
            "self_rules": {
                "description": "Pair a window head with later occurrences of the "
                "same symbol (x -> x).",
                "options": [0, 1],
                "value": 1,
            },
            "conjunctive": {
                "description": "Search rules with conjunctive premises after the "
                "atomic rules.",
                "options": [0, 1],
                "value": 0,
            },
        },
        "frequent": {
            "minsup": {
                "description": "Minimum support of frequent rule mining, in (0, 1].",
                "value": 0.1,
            },
            "min_lift": {
                "description": "Only keep frequent rules with a lift above this "
                "value. -1 disables the lift threshold.",
                "value": -1,
            },
            "target_rule_count": {
                "description": "If positive, the minimum support is chosen such that "
                "this number of rules is returned. -1 uses minsup.",
                "value": -1,
            },
        },
        "filtering": {
            "filter": {
                "description": "Filter applied to the mined rules before building "
                "routines.",
                "options": ["none", "confidence", "bayes_factor", "best_confidence"],
                "value": "confidence",
            },
            "confidence_threshold": {
                "description": "Minimum confidence of the confidence filter.",
                "value": 0.5,
            },
            "bayes_factor_threshold": {
                "description": "Minimum Bayes factor of the Bayes factor filter.",
                "value": 1.0,
            },
        },
        "evaluation": {
            "odds_ratio": {
                "description": "Computes odds ratios with bootstrap confidence "
                "intervals for the filtered rules.",
                "options": [0, 1],
                "value": 0,
            },
            "bootstrap_iterations": {
                "description": "Number of bootstrap resamples.",
                "value": 10000,
            },
            "confidence_level": {
                "description": "Level of the bootstrap confidence interval.",
                "value": 0.95,
            },
        },
        "synthetic": {
            "v_random": {
                "description": "Vocabulary of the random process.",
                "value": [0, 1, 2, 3],
            },
            "chain": {
                "description": "Ordered symbols of the chain process.",
                "value": [10, 11, 12],
            },
            "n_random": {
                "description": "Number of symbols of the random process.",
                "value": 1000,
            },
            "n_chains": {
                "description": "Number of chain emissions.",
                "value": 20,
            },
            "gap_min": {
                "description": "Smallest distance between consecutive chain symbols.",
                "value": 1,
            },
            "gap_max": {
                "description": "Largest distance between consecutive chain symbols.",
                "value": 10,
            },
        },
        "sweeps": {
            "ow_min": {
                "description": "Smallest observation window of the window sweep.",
                "value": 2,
            },
            "ow_max": {
                "description": "Largest observation window of the window sweep.",
                "value": 500,
            },
            "runs_per_ow": {
                "description": "Generated timeseries per observation window.",
                "value": 100,
            },
            "selector_samples": {
                "description": "Number of equidistant selector values in [0, 1].",
                "value": 200,
            },
            "n_jobs": {
                "description": "Number of parallel worker processes.",
                "value": 1,
            },
        },
        "reporting": {
            "save_path": {
                "description": "Path to save results to.",
                "value": "./userData/",
            },
            "save_summary_path": {
                "description": "Path to save the summary file to.",
                "value": "./userData/",
            },
            "case_name": {
                "description": "Option to define a case study name that is added to "
                "the results folder name.",
                "value": -1,
            },
            "write_dot": {
                "description": "Writes the routine graph as DOT file.",
                "options": [0, 1],
                "value": 1,
            },
            "write_diagnostics": {
                "description": "Logs violated rule set invariants after mining.",
                "options": [0, 1],
                "value": 0,
            },
        },
        "seed": {
            "description": "Seed of all random draws.",
            "value": 0,
        },
    }

    return configuration_template


def create_mining_templates(path: Path | str):
    """
    Creates a mining configuration json file in the specified path.

    :param str/Path path: path to folder to create ConfigMining.json
    """
    if isinstance(path, str):
        path = Path(path)

    config_file = path / "ConfigMining.json"

    # Check if the file already exists
    if config_file.exists():
        print(f"File already exists: {config_file}")
        return

    configuration_template = initialize_configuration_templates()

    with open(config_file, "w") as f:
        json.dump(configuration_template, f, indent=4)
