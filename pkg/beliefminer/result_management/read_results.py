import io
import json
import sys
from pathlib import Path

import pandas as pd

from ..components.rule import Rule
from ..data_management.utilities import DataFormatError
from ..rule_evaluation.metrics import ScoredRule

COMMENT_PREFIXES = ("#", "//")


def strip_comments(text: str) -> str:
    """
    Removes comment lines (metadata footers) from the content of a result file

    :param str text: file content
    :return: content without comment lines
    :rtype: str
    """
    return "\n".join(
        line
        for line in text.splitlines()
        if not line.lstrip().startswith(COMMENT_PREFIXES)
    )


def read_metadata(path: Path | str) -> dict:
    """
    Reads the metadata footer of a result file

    :param Path, str path: result file
    :return: metadata, empty if the file has no footer
    :rtype: dict
    """
    for line in reversed(Path(path).read_text().splitlines()):
        stripped = line.strip()
        for prefix in COMMENT_PREFIXES:
            if stripped.startswith(prefix):
                return json.loads(stripped[len(prefix) :])
        if stripped:
            break
    return {}


def rule_from_dict(record: dict) -> ScoredRule:
    """
    Scored rule from its serialized representation

    :param dict record: one object of a rules file
    :return: scored rule
    :rtype: ScoredRule
    """
    belief = record.get("belief")
    ci95 = record.get("ci95")
    return ScoredRule(
        rule=Rule(tuple(record["premise"]), tuple(record["conclusion"])),
        confidence=record["confidence"],
        bayes_factor=record["bayes_factor"],
        support=record["support"],
        belief=float("nan") if belief is None else belief,
        rule_count=record["rule_count"],
        conclusion_count=record["conclusion_count"],
        premise_count=record.get("premise_count", 0),
        p_ab=record.get("p_ab"),
        min_selector=record.get("min_selector"),
        lift=record.get("lift"),
        odds_ratio=record.get("odds_ratio"),
        ci95=None if ci95 is None else tuple(ci95),
    )


def read_rules(path: Path | str) -> list[ScoredRule]:
    """
    Reads a rules file written by emit_rules ("-" reads standard input)

    :param Path, str path: rules file
    :return: scored rules in file order
    :rtype: list
    """
    if str(path) == "-":
        text = sys.stdin.read()
    else:
        text = Path(path).read_text()
    records = json.loads(strip_comments(text))
    if not isinstance(records, list):
        raise DataFormatError("E_FORMAT", "A rules file holds a list of rules")

    rules = []
    for number, record in enumerate(records, start=1):
        try:
            rules.append(rule_from_dict(record))
        except KeyError as err:
            raise DataFormatError(
                "E_FORMAT", f"Rule {number} has no field {err}"
            ) from err
        except (AttributeError, TypeError, ValueError) as err:
            raise DataFormatError("E_FORMAT", f"Rule {number}: {err}") from err
    return rules


def read_table(path: Path | str) -> pd.DataFrame:
    """
    Reads a CSV table written by write_table

    :param Path, str path: table file
    :return: table
    :rtype: pd.DataFrame
    """
    return pd.read_csv(io.StringIO(strip_comments(Path(path).read_text())))
