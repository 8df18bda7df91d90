import argparse
import json
import logging
import sys
from dataclasses import dataclass, field

from .components.parameters import ConfigurationError, MiningParams
from .data_management.utilities import DataFormatError, ingest
from .data_preprocessing.synthetic_data import generate_timeseries
from .data_preprocessing.template_creation import initialize_configuration_templates
from .experiments.sweeps import ow_sweep, selector_sweep
from .result_management import (
    build_metadata,
    emit_rules,
    read_rules,
    write_dot,
    write_pep_report,
    write_table,
    write_timeseries,
)
from .routines.graph import build_graph
from .routines.pep import pep_sweep
from .rule_evaluation.filters import apply_filter
from .rule_evaluation.metrics import score_rules
from .rule_evaluation.odds_ratio import evaluate_odds_ratios
from .rule_mining.mine_atomic import mine_atomic
from .rule_mining.mine_conjunctive import mine_conjunctive
from .rule_mining.mine_frequent import mine_frm, minsup_for_rule_count
from .rule_mining.utilities import MiningError
from .utilities import (
    get_config_value,
    get_filter_threshold,
    get_generator_config,
    get_mining_parameters,
    get_pipeline_config,
)

log = logging.getLogger(__name__)

COMMANDS = (
    "mine-brm",
    "mine-frm",
    "mine-conjunctive",
    "filter",
    "graph",
    "pep",
    "synth",
    "sweep-ow",
    "sweep-selector",
    "metrics",
)

# Commands mining a dataset and therefore needing an observation window in
# timeseries mode
WINDOWED_COMMANDS = (
    "mine-brm",
    "mine-frm",
    "mine-conjunctive",
    "pep",
    "sweep-selector",
    "metrics",
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONFIG = 3
EXIT_DATA = 4
EXIT_IO = 5
EXIT_MINING = 6

# Flag -> entry of the mining configuration it overrides
CONFIG_OVERRIDES = {
    "mode": ("mining", "mode"),
    "method": ("mining", "method"),
    "prior": ("mining", "prior"),
    "selector": ("mining", "selector"),
    "ow": ("mining", "observation_window"),
    "window_unit": ("mining", "window_unit"),
    "minsup": ("frequent", "minsup"),
    "min_lift": ("frequent", "min_lift"),
    "target_rule_count": ("frequent", "target_rule_count"),
    "filter": ("filtering", "filter"),
    "iterations": ("evaluation", "bootstrap_iterations"),
    "level": ("evaluation", "confidence_level"),
    "v_random": ("synthetic", "v_random"),
    "chain": ("synthetic", "chain"),
    "n_random": ("synthetic", "n_random"),
    "n_chains": ("synthetic", "n_chains"),
    "gap_min": ("synthetic", "gap_min"),
    "gap_max": ("synthetic", "gap_max"),
    "ow_min": ("sweeps", "ow_min"),
    "ow_max": ("sweeps", "ow_max"),
    "runs": ("sweeps", "runs_per_ow"),
    "samples": ("sweeps", "selector_samples"),
    "n_jobs": ("sweeps", "n_jobs"),
}


@dataclass(frozen=True)
class RunConfig:
    """
    Validated invocation of a command

    - command: subcommand to run
    - input: input file ("-" is standard input)
    - output: output file ("-" is standard output)
    - config: mining configuration with all command line overrides applied
    - params: mining parameters derived from config
    - rules: optional rules file (metrics)
    - json_errors: print errors as JSON
    - quiet: only log warnings and errors
    - options: command specific settings (graph name)
    """

    command: str
    input: str
    output: str
    config: dict
    params: MiningParams
    rules: str | None = None
    json_errors: bool = False
    quiet: bool = False
    options: dict = field(default_factory=dict)


def _symbol_list(text: str) -> list:
    tokens = [token.strip() for token in text.split(",") if token.strip()]
    try:
        return [int(token) for token in tokens]
    except ValueError:
        return tokens


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--input", "-i", default="-", help="Input file, standard input if omitted"
    )
    common.add_argument(
        "--out", "-o", default="-", help="Output file, standard output if omitted"
    )
    common.add_argument(
        "--config", help="ConfigMining.json whose values the flags override"
    )
    common.add_argument("--mode", choices=["timeseries", "database"])
    common.add_argument("--prior", type=float, help="Prior belief in (0, 1)")
    common.add_argument("--selector", type=float, help="Selector s in [0, 1]")
    common.add_argument("--ow", type=float, help="Observation window")
    common.add_argument("--window-unit", choices=["symbols", "time"])
    common.add_argument(
        "--no-self-rules",
        action="store_true",
        help="Do not pair a window head with later occurrences of itself",
    )
    common.add_argument("--minsup", type=float, help="Minimum support of FRM")
    common.add_argument("--min-lift", type=float, help="Lift threshold of FRM")
    common.add_argument(
        "--target-rule-count",
        type=int,
        help="Choose the minimum support of FRM to return this many rules",
    )
    common.add_argument(
        "--filter",
        choices=[
            "none",
            "confidence",
            "bayes-factor",
            "best-confidence",
            "bayes_factor",
            "best_confidence",
        ],
    )
    common.add_argument("--threshold", type=float, help="Threshold of the filter")
    common.add_argument("--seed", type=int, help="Seed of all random draws")
    common.add_argument("--n-jobs", type=int, help="Number of worker processes")
    common.add_argument("--quiet", "-q", action="store_true", help="Only warnings")
    common.add_argument(
        "--json", action="store_true", help="Print errors as JSON objects"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """
    Command line parser with one subcommand per operation

    :return: parser
    :rtype: argparse.ArgumentParser
    """
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="beliefminer",
        description="Bayesian rule mining of timeseries and databases",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    s = subparsers.add_parser(
        "mine-brm", parents=[common], help="Mine atomic rules with increasing belief"
    )
    s.set_defaults(main=mine_brm_command)

    s = subparsers.add_parser(
        "mine-frm", parents=[common], help="Mine frequent rules (minimum support)"
    )
    s.set_defaults(main=mine_frm_command)

    s = subparsers.add_parser(
        "mine-conjunctive",
        parents=[common],
        help="Mine rules with conjunctive premises",
    )
    s.set_defaults(main=mine_conjunctive_command)

    s = subparsers.add_parser(
        "filter", parents=[common], help="Filter a rules file"
    )
    s.set_defaults(main=filter_command)

    s = subparsers.add_parser(
        "graph", parents=[common], help="Write the rule graph of a rules file as DOT"
    )
    s.add_argument("--name", default="routines", help="Name of the graph")
    s.set_defaults(main=graph_command)

    s = subparsers.add_parser(
        "pep", parents=[common], help="Run the entity exclusion process"
    )
    s.add_argument("--method", choices=["brm", "frm"])
    s.add_argument(
        "--conjunctive", action="store_true", help="Include conjunctive premises"
    )
    s.set_defaults(main=pep_command)

    for name, handler, help_text in (
        ("synth", synth_command, "Generate a proof-of-concept timeseries"),
        ("sweep-ow", sweep_ow_command, "Sweep the observation window"),
    ):
        s = subparsers.add_parser(name, parents=[common], help=help_text)
        s.add_argument("--v-random", type=_symbol_list, help="e.g. 0,1,2,3")
        s.add_argument("--chain", type=_symbol_list, help="e.g. 10,11,12")
        s.add_argument("--n-random", type=int)
        s.add_argument("--n-chains", type=int)
        s.add_argument("--gap-min", type=int)
        s.add_argument("--gap-max", type=int)
        s.set_defaults(main=handler)
        if name == "sweep-ow":
            s.add_argument("--ow-min", type=int)
            s.add_argument("--ow-max", type=int)
            s.add_argument("--runs", type=int, help="Generated timeseries per ow")

    s = subparsers.add_parser(
        "sweep-selector", parents=[common], help="Sweep the selector over [0, 1]"
    )
    s.add_argument("--samples", type=int, help="Number of selector values")
    s.set_defaults(main=sweep_selector_command)

    s = subparsers.add_parser(
        "metrics",
        parents=[common],
        help="Odds ratios with bootstrap intervals of mined or given rules",
    )
    s.add_argument("--rules", help="Rules file, the dataset is mined if omitted")
    s.add_argument("--iterations", type=int, help="Bootstrap resamples")
    s.add_argument("--level", type=float, help="Confidence level")
    s.set_defaults(main=metrics_command)

    return parser


def _set_config_value(config: dict, value, section: str, key: str = None):
    entry = config.setdefault(section, {})
    if key is not None:
        entry = entry.setdefault(key, {})
    entry["value"] = value


def _load_config(args: argparse.Namespace) -> dict:
    """
    Mining configuration of a run: the given ConfigMining.json or the template, with
    every given flag applied on top

    Without a configuration file no observation window is set, so timeseries
    commands need --ow.
    """
    if args.config:
        with open(args.config) as json_file:
            config = json.load(json_file)
    else:
        config = initialize_configuration_templates()
        config["mining"]["observation_window"]["value"] = None

    for dest, (section, key) in CONFIG_OVERRIDES.items():
        value = getattr(args, dest, None)
        if value is not None:
            if dest == "filter":
                value = value.replace("-", "_")
            _set_config_value(config, value, section, key)
    if args.seed is not None:
        _set_config_value(config, args.seed, "seed")
    if args.no_self_rules:
        _set_config_value(config, 0, "mining", "self_rules")
    if getattr(args, "conjunctive", False):
        _set_config_value(config, 1, "mining", "conjunctive")
    if args.threshold is not None:
        name = get_config_value(config, "filtering", "filter")
        key = (
            "bayes_factor_threshold"
            if name == "bayes_factor"
            else "confidence_threshold"
        )
        _set_config_value(config, args.threshold, "filtering", key)
    return config


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """
    Validates the command specific requirements of an invocation

    :param argparse.Namespace args: parsed arguments
    :return: run configuration
    :rtype: RunConfig
    """
    config = _load_config(args)
    if args.command == "synth":
        config["mining"]["mode"]["value"] = "timeseries"
    if args.command == "sweep-ow":
        config["mining"]["mode"]["value"] = "timeseries"
        config["mining"]["observation_window"]["value"] = None

    params = get_mining_parameters(config)
    if (
        args.command in WINDOWED_COMMANDS
        and params.mode == "timeseries"
        and params.ow is None
    ):
        raise ConfigurationError(
            f"{args.command} needs an observation window (--ow) in timeseries mode"
        )
    return RunConfig(
        command=args.command,
        input=args.input,
        output=args.out,
        config=config,
        params=params,
        rules=getattr(args, "rules", None),
        json_errors=args.json,
        quiet=args.quiet,
        options={"name": getattr(args, "name", "routines")},
    )


def _metadata(run: RunConfig) -> dict:
    return build_metadata(
        seed=run.params.rng_seed, params=run.params, command=run.command
    )


def _read_dataset(run: RunConfig):
    return ingest(run.input, run.params.mode)


def mine_brm_command(run: RunConfig):
    ruleset = mine_atomic(_read_dataset(run), run.params)
    emit_rules(ruleset, run.output, _metadata(run))


def mine_frm_command(run: RunConfig):
    dataset = _read_dataset(run)
    target = get_config_value(run.config, "frequent", "target_rule_count")
    minsup = run.params.minsup
    if target > 0:
        minsup = minsup_for_rule_count(dataset, target, run.params)
    min_lift = get_config_value(run.config, "frequent", "min_lift")
    ruleset = mine_frm(
        dataset, minsup, run.params, min_lift if min_lift >= 0 else None
    )
    emit_rules(ruleset, run.output, _metadata(run))


def mine_conjunctive_command(run: RunConfig):
    dataset = _read_dataset(run)
    ruleset = mine_atomic(dataset, run.params)
    conjunctive = mine_conjunctive(ruleset, dataset, run.params)
    emit_rules(conjunctive, run.output, _metadata(run))


def filter_command(run: RunConfig):
    name = get_config_value(run.config, "filtering", "filter")
    threshold = get_filter_threshold(run.config)
    rules = apply_filter(read_rules(run.input), name, threshold)
    emit_rules(rules, run.output, _metadata(run))


def graph_command(run: RunConfig):
    graph = build_graph(read_rules(run.input))
    write_dot(graph, run.output, _metadata(run), name=run.options["name"])


def pep_command(run: RunConfig):
    n_jobs = get_config_value(run.config, "sweeps", "n_jobs")
    report = pep_sweep(_read_dataset(run), get_pipeline_config(run.config), n_jobs)
    write_pep_report(report, run.output, _metadata(run))


def synth_command(run: RunConfig):
    dataset = generate_timeseries(get_generator_config(run.config))
    write_timeseries(dataset, run.output, _metadata(run))


def sweep_ow_command(run: RunConfig):
    config = run.config
    table = ow_sweep(
        ow_range=(
            get_config_value(config, "sweeps", "ow_min"),
            get_config_value(config, "sweeps", "ow_max"),
        ),
        runs_per_ow=get_config_value(config, "sweeps", "runs_per_ow"),
        cfg=get_generator_config(config),
        params=run.params,
        base_seed=run.params.rng_seed,
        n_jobs=get_config_value(config, "sweeps", "n_jobs"),
    )
    write_table(table, run.output, _metadata(run))


def sweep_selector_command(run: RunConfig):
    samples = get_config_value(run.config, "sweeps", "selector_samples")
    table = selector_sweep(_read_dataset(run), run.params, samples)
    write_table(table, run.output, _metadata(run))


def metrics_command(run: RunConfig):
    config = run.config
    dataset = _read_dataset(run)
    if run.rules:
        rules = read_rules(run.rules)
    else:
        rules = score_rules(mine_atomic(dataset, run.params))
    rules = evaluate_odds_ratios(
        rules,
        dataset,
        run.params,
        iterations=get_config_value(config, "evaluation", "bootstrap_iterations"),
        level=get_config_value(config, "evaluation", "confidence_level"),
        seed=run.params.rng_seed,
    )
    emit_rules(rules, run.output, _metadata(run))


def _error_category(err: Exception) -> tuple[str, int]:
    """
    Machine-readable category and exit status of an error
    """
    if isinstance(err, DataFormatError):
        return err.category, EXIT_DATA
    if isinstance(err, MiningError):
        if err.category == "E_CONFIG":
            return err.category, EXIT_CONFIG
        return err.category, EXIT_MINING
    if isinstance(err, NotImplementedError):
        return "E_MINING", EXIT_MINING
    if isinstance(err, OSError):
        return "E_IO", EXIT_IO
    if isinstance(err, json.JSONDecodeError):
        return "E_FORMAT", EXIT_DATA
    return "E_CONFIG", EXIT_CONFIG


def _report_error(err: Exception, json_errors: bool) -> int:
    category, status = _error_category(err)
    if json_errors:
        message = json.dumps({"error": category, "message": str(err)})
    else:
        message = f"error[{category}]: {err}"
    print(message, file=sys.stderr)
    return status


def _set_console_level(level: int):
    for handler in logging.getLogger("beliefminer").handlers:
        if isinstance(handler, logging.StreamHandler):
            handler.setLevel(level)


def run(argv: list[str] = None) -> int:
    """
    Runs one command

    :param list argv: command line arguments, sys.argv[1:] if not given
    :return: exit status, 0 on success
    :rtype: int
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return EXIT_USAGE if exit_request.code else EXIT_OK

    if args.quiet:
        _set_console_level(logging.WARNING)
    try:
        run_config = build_run_config(args)
        args.main(run_config)
    except (ValueError, OSError, NotImplementedError) as err:
        return _report_error(err, args.json)
    finally:
        if args.quiet:
            _set_console_level(logging.INFO)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
