import os
import time
from pathlib import Path

from .components.parameters import MiningParams
from .data_management import DataHandle
from .diagnostics import get_rule_set_violations
from .routines import build_graph, components, pep_sweep
from .rule_evaluation import apply_filter, evaluate_odds_ratios, score_rules
from .rule_mining import (
    MiningError,
    mine_atomic,
    mine_conjunctive,
    mine_frm,
    minsup_for_rule_count,
)
from .result_management import (
    build_metadata,
    create_save_folder,
    create_unique_folder_name,
    emit_rules,
    result_folder_name,
    write_dot,
    write_pep_report,
    write_summary,
)
from .utilities import (
    get_config_value,
    get_filter_threshold,
    get_mining_parameters,
    get_pipeline_config,
)
import logging

log = logging.getLogger(__name__)


class MiningHub:
    """
    Class to mine rules and routines from a dataset.

    When constructing an instance, it initializes all attributes of the MiningHub
    class:

    - self.data: Data container (configuration and dataset)
    - self.params: Mining parameters derived from the configuration
    - self.ruleset: Atomic (brm) or frequent (frm) rule set
    - self.conjunctive_ruleset: Rules with conjunctive premises (if searched)
    - self.scored_rules: Rules with their metrics
    - self.filtered_rules: Rules kept by the configured filter
    - self.graph: Rule graph of the filtered rules
    - self.routines: Weakly connected components of the rule graph
    - self.pep_report: Result of the entity exclusion process (if run)
    - self.last_run_info: Information on the last run that is written to the
      summary
    """

    def __init__(self):
        """
        Constructor
        """
        self.data = DataHandle()
        self.params = None
        self.ruleset = None
        self.conjunctive_ruleset = None
        self.scored_rules = []
        self.filtered_rules = []
        self.graph = None
        self.routines = []
        self.pep_report = None
        self.last_run_info = {}

    def read_data(self, data_path: Path | str):
        """
        Reads in data from the specified path. The data is specified as the
        DataHandle class.

        :param Path, str data_path: Path of the case folder to read data from
        """
        log_msg = "--- Reading in data ---"
        log.info(log_msg)
        self.data.set_settings(data_path)
        self.data.read_data()
        self.params = get_mining_parameters(self.data.mining_config)
        self._perform_preprocessing_checks()

        log_msg = "--- Reading in data complete ---"
        log.info(log_msg)

    def set_data(self, mining_config: dict, dataset):
        """
        Sets configuration and dataset directly, without a case folder

        :param dict mining_config: mining configuration
        :param Dataset dataset: dataset to mine
        """
        self.data.set_mining_config(mining_config)
        self.data.set_dataset(dataset)
        self.params = get_mining_parameters(mining_config)
        self._perform_preprocessing_checks()

    def _perform_preprocessing_checks(self):
        """
        Checks consistency of input data, before mining

        - Save path must exist
        - Dataset and configuration need to be in the same mode
        - Timeseries need an observation window
        """
        config = self.data.mining_config

        # Check if save-path exists
        save_path = Path(get_config_value(config, "reporting", "save_path"))
        if not os.path.exists(save_path) or not os.path.isdir(save_path):
            raise FileNotFoundError(
                f"The folder you want to save your results to ('{save_path}') does "
                f"not exist. Create the folder or change the folder name in the "
                f"ConfigMining"
            )

        dataset = self.data.dataset
        if dataset is not None and dataset.mode != self.params.mode:
            raise MiningError(
                "E_CONFIG",
                f"The dataset is a {dataset.mode} but the configuration is set to "
                f"{self.params.mode} mode",
            )
        if self.params.mode == "timeseries" and self.params.ow is None:
            raise MiningError(
                "E_CONFIG", "An observation window is required in timeseries mode"
            )

    def mine(self):
        """
        Mines rules with the configured method and scores them
        """
        config = self.data.mining_config
        dataset = self.data.dataset
        method = get_config_value(config, "mining", "method")

        start = time.time()
        if method == "brm":
            log_msg = "--- Mining atomic rules ---"
            log.info(log_msg)
            self.ruleset = mine_atomic(dataset, self.params)
            self.scored_rules = score_rules(self.ruleset)

            if get_config_value(config, "mining", "conjunctive"):
                log_msg = "--- Searching conjunctive premises ---"
                log.info(log_msg)
                self.conjunctive_ruleset = mine_conjunctive(
                    self.ruleset, dataset, self.params
                )
                self.scored_rules += score_rules(self.conjunctive_ruleset)
        elif method == "frm":
            log_msg = "--- Mining frequent rules ---"
            log.info(log_msg)
            self.ruleset = mine_frm(
                dataset, self._get_minsup(), self.params, self._get_min_lift()
            )
            self.scored_rules = score_rules(self.ruleset)
        else:
            raise MiningError("E_CONFIG", f"Unknown mining method '{method}'")

        if get_config_value(config, "reporting", "write_diagnostics"):
            get_rule_set_violations(self.ruleset)
            if self.conjunctive_ruleset is not None:
                get_rule_set_violations(self.conjunctive_ruleset, self.ruleset)

        self.last_run_info["method"] = method
        self.last_run_info["time_mining"] = round(time.time() - start, 3)
        log_msg = (
            f"Mining completed in {self.last_run_info['time_mining']}s: "
            f"{len(self.scored_rules)} rules"
        )
        log.info(log_msg)

    def _get_minsup(self) -> float:
        """
        Minimum support of frequent rule mining, from the configuration or chosen to
        match the target rule count
        """
        config = self.data.mining_config
        target = get_config_value(config, "frequent", "target_rule_count")
        if target > 0:
            return minsup_for_rule_count(self.data.dataset, target, self.params)
        return self.params.minsup

    def _get_min_lift(self) -> float | None:
        min_lift = get_config_value(self.data.mining_config, "frequent", "min_lift")
        return min_lift if min_lift >= 0 else None

    def filter_rules(self):
        """
        Applies the configured filter to the scored rules
        """
        config = self.data.mining_config
        name = get_config_value(config, "filtering", "filter")
        self.filtered_rules = apply_filter(
            self.scored_rules, name, get_filter_threshold(config)
        )
        if self.scored_rules and not self.filtered_rules:
            log_msg = f"Filter '{name}' removed all {len(self.scored_rules)} rules"
            log.warning(log_msg)
        else:
            log_msg = (
                f"Filter '{name}' kept {len(self.filtered_rules)} of "
                f"{len(self.scored_rules)} rules"
            )
            log.info(log_msg)

    def evaluate_rules(self):
        """
        Computes odds ratios with bootstrap confidence intervals of the filtered
        rules, if enabled in the configuration
        """
        config = self.data.mining_config
        if not get_config_value(config, "evaluation", "odds_ratio"):
            return
        log_msg = "--- Evaluating odds ratios ---"
        log.info(log_msg)
        self.filtered_rules = evaluate_odds_ratios(
            self.filtered_rules,
            self.data.dataset,
            self.params,
            iterations=get_config_value(config, "evaluation", "bootstrap_iterations"),
            level=get_config_value(config, "evaluation", "confidence_level"),
            seed=self.params.rng_seed,
        )

    def build_routines(self):
        """
        Builds the rule graph of the filtered rules and extracts the routines
        """
        self.graph = build_graph(self.filtered_rules)
        self.routines = components(self.graph)
        log_msg = f"Routines found: {len(self.routines)}"
        log.info(log_msg)
        for routine in self.routines:
            log.debug(f"Routine {routine}")

    def run_pep(self, n_jobs: int = None):
        """
        Runs the entity exclusion process with the configured pipeline

        :param int n_jobs: number of parallel exclusion runs, from the configuration
            if not given
        """
        config = self.data.mining_config
        if n_jobs is None:
            n_jobs = get_config_value(config, "sweeps", "n_jobs")
        log_msg = "--- Running entity exclusion process ---"
        log.info(log_msg)
        self.pep_report = pep_sweep(
            self.data.dataset, get_pipeline_config(config), n_jobs=n_jobs
        )

    def quick_mine(self):
        """
        Quick-mines the dataset (mines, filters, evaluates, builds routines and
        writes results).

        This method lumps together the following functions for convenience:
        - :func:`~beliefminer.mininghub.mine`
        - :func:`~beliefminer.mininghub.filter_rules`
        - :func:`~beliefminer.mininghub.evaluate_rules`
        - :func:`~beliefminer.mininghub.build_routines`
        - :func:`~beliefminer.mininghub.write_results`
        """
        self.mine()
        self.filter_rules()
        self.evaluate_rules()
        self.build_routines()
        return self.write_results()

    def write_results(self) -> Path:
        """
        Writes the results of a mining run to a new folder and adds a row to the
        summary

        :return: path of the results folder
        :rtype: Path
        """
        config = self.data.mining_config
        start = time.time()

        # Create save path and folder
        save_path = Path(get_config_value(config, "reporting", "save_path"))
        folder_name = result_folder_name(
            get_config_value(config, "reporting", "case_name"), start
        )
        result_folder_path = create_unique_folder_name(save_path, folder_name)
        create_save_folder(result_folder_path)

        metadata = build_metadata(
            seed=self.params.rng_seed,
            params=self.params,
            method=self.last_run_info.get("method"),
        )
        emit_rules(self.filtered_rules, result_folder_path / "rules.json", metadata)
        if self.conjunctive_ruleset is not None:
            emit_rules(
                self.conjunctive_ruleset,
                result_folder_path / "conjunctive_rules.json",
                metadata,
            )
        write_graph = get_config_value(config, "reporting", "write_dot")
        if write_graph and self.graph is not None:
            write_dot(self.graph, result_folder_path / "routines.dot", metadata)
        if self.pep_report is not None:
            write_pep_report(self.pep_report, result_folder_path / "pep.json", metadata)

        self.last_run_info["result_folder_path"] = result_folder_path

        # Write Summary
        save_summary_path = Path.joinpath(
            Path(get_config_value(config, "reporting", "save_summary_path")),
            "Summary.xlsx",
        )
        write_summary(self._get_summary(result_folder_path), save_summary_path)

        log_msg = f"Results written to {result_folder_path}"
        log.info(log_msg)
        return result_folder_path

    def _get_summary(self, folder_path: Path) -> dict:
        """
        Values of the last run that are added to the summary

        :param Path folder_path: results folder of the run
        :return: summary_dict
        :rtype: dict
        """
        config = self.data.mining_config
        params: MiningParams = self.params

        summary_dict = {}
        summary_dict["case"] = get_config_value(config, "reporting", "case_name")
        summary_dict["time_stamp"] = str(folder_path)
        summary_dict["method"] = self.last_run_info.get("method")
        summary_dict["mode"] = params.mode
        summary_dict["dataset_size"] = self.data.dataset.size
        summary_dict["observation_window"] = params.ow
        summary_dict["selector"] = params.selector
        summary_dict["prior"] = params.prior
        summary_dict["filter"] = get_config_value(config, "filtering", "filter")
        summary_dict["seed"] = params.rng_seed
        summary_dict["rules_mined"] = len(self.scored_rules)
        summary_dict["rules_filtered"] = len(self.filtered_rules)
        summary_dict["routines"] = len(self.routines)
        summary_dict["time_mining"] = self.last_run_info.get("time_mining")
        if self.pep_report is not None:
            summary_dict["pep_changed_entities"] = len(
                self.pep_report.changed_entities()
            )
        return summary_dict
