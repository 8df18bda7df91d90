import json
import math
import os
import sys
from pathlib import Path

import pandas as pd

from ..components.parameters import MiningParams
from ..components.rule import RuleSet
from ..data_management.dataset import Dataset, TIMESERIES
from ..routines.graph import RoutineGraph, export_dot
from ..routines.pep import PepReport
from ..rule_evaluation.metrics import ScoredRule, score_rules
from ..version import __version__

import logging

log = logging.getLogger(__name__)


def build_metadata(seed: int = None, params: MiningParams = None, **extra) -> dict:
    """
    Metadata written to the footer of every result file

    :param int seed: seed of the run
    :param MiningParams params: mining parameters of the run
    :return: dict with version, seed, params and any extra entries
    :rtype: dict
    """
    metadata = {"version": __version__, "seed": seed}
    if params is not None:
        metadata["params"] = params.as_dict()
    metadata.update(extra)
    return metadata


def metadata_footer(metadata: dict, prefix: str = "#") -> str:
    """
    Single comment line holding the metadata as JSON

    :param dict metadata: metadata
    :param str prefix: comment prefix, # for CSV and JSON, // for DOT
    :return: footer line including the line break
    :rtype: str
    """
    return f"{prefix} {json.dumps(metadata, sort_keys=True, default=str)}\n"


def _write_text(text: str, path: Path | str = None):
    """
    Writes text to a file, or to standard output if path is None or "-"
    """
    if path is None or str(path) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(path).write_text(text)
    log.debug(f"Written {path}")


def _with_footer(text: str, metadata: dict, prefix: str = "#") -> str:
    if not text.endswith("\n"):
        text += "\n"
    if metadata is not None:
        text += metadata_footer(metadata, prefix)
    return text


def rule_to_dict(rule: ScoredRule) -> dict:
    """
    Serializable representation of a scored rule

    A belief of nan (frequent rules) is written as null, an infinite Bayes factor
    as Infinity.

    :param ScoredRule rule: scored rule
    :return: dict with one entry per rule field
    :rtype: dict
    """
    record = {
        "premise": list(rule.premise),
        "conclusion": list(rule.conclusion),
        "rule_count": rule.rule_count,
        "conclusion_count": rule.conclusion_count,
        "premise_count": rule.premise_count,
        "belief": None if math.isnan(rule.belief) else rule.belief,
        "confidence": rule.confidence,
        "support": rule.support,
        "bayes_factor": rule.bayes_factor,
        "min_selector": rule.min_selector,
        "p_ab": rule.p_ab,
        "lift": rule.lift,
    }
    if rule.odds_ratio is not None:
        record["odds_ratio"] = rule.odds_ratio
        record["ci95"] = list(rule.ci95)
    return record


def emit_rules(
    rules: RuleSet | list[ScoredRule], path: Path | str = None, metadata: dict = None
) -> str:
    """
    Writes rules as a JSON array, one object per rule with sorted keys, rules in
    canonical order

    :param rules: rule set (scored first) or scored rules
    :param Path, str path: output file, standard output if None or "-"
    :param dict metadata: footer metadata, no footer if None
    :return: the written text
    :rtype: str
    """
    if isinstance(rules, RuleSet):
        rules = score_rules(rules)
    rules = sorted(rules, key=lambda r: r.rule.sort_key)
    text = json.dumps([rule_to_dict(r) for r in rules], sort_keys=True, indent=2)
    text = _with_footer(text, metadata)
    _write_text(text, path)
    return text


def write_dot(
    graph: RoutineGraph,
    path: Path | str = None,
    metadata: dict = None,
    name: str = "routines",
) -> str:
    """
    Writes a rule graph in DOT format

    :param RoutineGraph graph: rule graph
    :param Path, str path: output file, standard output if None or "-"
    :param dict metadata: footer metadata
    :param str name: graph name
    :return: the written text
    :rtype: str
    """
    text = _with_footer(export_dot(graph, name), metadata, prefix="//")
    _write_text(text, path)
    return text


def write_table(
    table: pd.DataFrame, path: Path | str = None, metadata: dict = None
) -> str:
    """
    Writes a table (sweep results, ...) as CSV with a header row

    :param pd.DataFrame table: table to write
    :param Path, str path: output file, standard output if None or "-"
    :param dict metadata: footer metadata
    :return: the written text
    :rtype: str
    """
    text = _with_footer(table.to_csv(index=False, lineterminator="\n"), metadata)
    _write_text(text, path)
    return text


def write_timeseries(
    dataset: Dataset, path: Path | str = None, metadata: dict = None
) -> str:
    """
    Writes a timeseries as CSV with header t,symbol and an entity column if any
    event is tagged

    :param Dataset dataset: timeseries
    :param Path, str path: output file, standard output if None or "-"
    :param dict metadata: footer metadata
    :return: the written text
    :rtype: str
    """
    if dataset.mode != TIMESERIES:
        raise ValueError("Only timeseries can be written as timeseries CSV")
    data = pd.DataFrame(
        {"t": [e.t for e in dataset.events], "symbol": dataset.symbols}
    )
    if any(entity is not None for entity in dataset.entities()):
        data["entity"] = [
            "" if e.entity is None else e.entity for e in dataset.events
        ]
    return write_table(data, path, metadata)


def write_database(
    dataset: Dataset, path: Path | str = None, metadata: dict = None
) -> str:
    """
    Writes a database, one record per line with an optional entity tag

    :param Dataset dataset: database
    :param Path, str path: output file, standard output if None or "-"
    :param dict metadata: footer metadata
    :return: the written text
    :rtype: str
    """
    if dataset.mode == TIMESERIES:
        raise ValueError("Only databases can be written as database file")
    lines = []
    for record in dataset.records:
        line = ",".join(str(s) for s in record.symbols)
        if record.entity is not None:
            line = f"{record.entity}:{line}"
        lines.append(line)
    text = _with_footer("\n".join(lines), metadata)
    _write_text(text, path)
    return text


def write_pep_report(
    report: PepReport, path: Path | str = None, metadata: dict = None
) -> str:
    """
    Writes the result of the entity exclusion process as JSON

    :param PepReport report: report
    :param Path, str path: output file, standard output if None or "-"
    :param dict metadata: footer metadata
    :return: the written text
    :rtype: str
    """
    text = json.dumps(report.to_dict(), sort_keys=True, indent=2, default=str)
    text = _with_footer(text, metadata)
    _write_text(text, path)
    return text


def write_summary(summary: dict, save_summary_path: Path):
    """
    Appends one row to the run summary (Summary.xlsx)

    :param dict summary: summary values of the run
    :param Path save_summary_path: path of the summary file
    """
    if not os.path.exists(save_summary_path):
        summary_df = pd.DataFrame(data=summary, index=[0])
        summary_df.to_excel(save_summary_path, index=False, sheet_name="Summary")
    else:
        summary_existing = pd.read_excel(save_summary_path)
        pd.concat([summary_existing, pd.DataFrame(data=summary, index=[0])]).to_excel(
            save_summary_path, index=False, sheet_name="Summary"
        )
