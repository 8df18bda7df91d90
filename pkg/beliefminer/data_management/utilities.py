import io
import re
import sys
from pathlib import Path

import pandas as pd

from .dataset import Dataset, Event, Record, TIMESERIES, DATABASE

import logging

log = logging.getLogger(__name__)

COMMENT_PREFIXES = ("#", "//")
_INTEGER = re.compile(r"^[+-]?\d+$")


class DataFormatError(ValueError):
    """
    Raised when an input file cannot be turned into a dataset

    :param str category: machine-readable error category (E_EMPTY, E_UNSORTED,
        E_DUPLICATE, E_FORMAT)
    :param str message: description of the problem
    :param int line_number: 1-based line of the input file, if known
    """

    def __init__(self, category: str, message: str, line_number: int = None):
        self.category = category
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


def check_input_data_consistency(path: Path | str):
    """
    Checks that a case folder holds a mining configuration and a dataset

    :param Path, str path: case folder
    """
    path = Path(path)
    if not path.is_dir():
        raise FileNotFoundError(f"The case folder '{path}' does not exist")
    if not (path / "ConfigMining.json").exists():
        raise FileNotFoundError(
            f"ConfigMining.json is missing in '{path}'. Create it with "
            f"create_mining_templates()"
        )
    if not any((path / name).exists() for name in ("Timeseries.csv", "Database.txt")):
        raise FileNotFoundError(
            f"Neither Timeseries.csv nor Database.txt was found in '{path}'"
        )


def _read_text(path) -> str:
    if str(path) == "-":
        return sys.stdin.read()
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Input file '{path}' does not exist")
    return path.read_text()


def _content_lines(text: str) -> list[tuple[int, str]]:
    """
    Non-empty, non-comment lines with their 1-based line numbers
    """
    lines = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith(COMMENT_PREFIXES):
            lines.append((number, stripped))
    return lines


def _coerce_symbols(tokens: list[str]) -> list:
    """
    Symbols are integers if every token of the file is an integer, strings otherwise
    """
    if tokens and all(_INTEGER.match(token) for token in tokens):
        return [int(token) for token in tokens]
    return tokens


def parse_timeseries(text: str) -> Dataset:
    """
    Parses a timeseries CSV with header t,symbol and an optional entity column

    Lines starting with # are comments. Time stamps need to be sorted (per entity).

    :param str text: file content
    :return: timeseries dataset
    :rtype: Dataset
    """
    lines = _content_lines(text)
    if len(lines) < 2:
        raise DataFormatError("E_EMPTY", "The timeseries file holds no events")

    try:
        data = pd.read_csv(
            io.StringIO("\n".join(line for _, line in lines)),
            dtype=str,
            keep_default_na=False,
            skipinitialspace=True,
        )
    except pd.errors.ParserError as err:
        raise DataFormatError("E_FORMAT", f"Malformed CSV: {err}") from err

    data.columns = [c.strip() for c in data.columns]
    if not {"t", "symbol"} <= set(data.columns):
        raise DataFormatError(
            "E_FORMAT",
            f"Header needs the columns t,symbol (and optionally entity), got "
            f"{','.join(data.columns)}",
            lines[0][0],
        )
    line_numbers = [number for number, _ in lines[1:]]

    times = pd.to_numeric(data["t"], errors="coerce")
    for row in range(len(data)):
        if pd.isna(times.iloc[row]):
            raise DataFormatError(
                "E_FORMAT",
                f"Time stamp '{data['t'].iloc[row]}' is not a number",
                line_numbers[row],
            )
        if not data["symbol"].iloc[row].strip():
            raise DataFormatError("E_FORMAT", "Empty symbol", line_numbers[row])

    has_entity = "entity" in data.columns
    entities = (
        [e.strip() or None for e in data["entity"]]
        if has_entity
        else [None] * len(data)
    )
    last_time = {}
    for row, (entity, t) in enumerate(zip(entities, times)):
        if entity in last_time and t < last_time[entity]:
            raise DataFormatError(
                "E_UNSORTED",
                f"Time stamp {data['t'].iloc[row]} is smaller than the previous "
                f"time stamp {last_time[entity]}",
                line_numbers[row],
            )
        last_time[entity] = t

    symbols = _coerce_symbols([s.strip() for s in data["symbol"]])
    if all(float(t).is_integer() for t in times):
        times = [int(t) for t in times]
    else:
        times = [float(t) for t in times]
    if has_entity:
        entities = _coerce_symbols(entities) if None not in entities else entities

    events = [
        Event(symbol=s, t=t, entity=e) for s, t, e in zip(symbols, times, entities)
    ]
    return Dataset(TIMESERIES, events=events)


def _check_duplicates(symbols, number: int):
    duplicates = sorted({str(s) for s in symbols if symbols.count(s) > 1})
    if duplicates:
        raise DataFormatError(
            "E_DUPLICATE",
            f"Record contains duplicate symbols {', '.join(duplicates)}",
            number,
        )


def parse_database(text: str) -> Dataset:
    """
    Parses a database file: one record per line, comma-separated symbols, with an
    optional leading entity tag ("entity: a, b, c")

    :param str text: file content
    :return: database dataset
    :rtype: Dataset
    """
    lines = _content_lines(text)
    if not lines:
        raise DataFormatError("E_EMPTY", "The database file holds no records")

    rows = []
    for number, line in lines:
        entity = None
        if ":" in line:
            entity, line = (part.strip() for part in line.split(":", 1))
            if not entity:
                raise DataFormatError("E_FORMAT", "Empty entity tag", number)
        tokens = [token.strip() for token in line.split(",")]
        if not any(tokens) or "" in tokens:
            raise DataFormatError("E_FORMAT", "Empty symbol in record", number)
        _check_duplicates(tokens, number)
        rows.append((number, entity, tokens))

    all_tokens = [token for _, _, tokens in rows for token in tokens]
    coerced = iter(_coerce_symbols(all_tokens))
    records = []
    for number, entity, tokens in rows:
        symbols = tuple(next(coerced) for _ in tokens)
        # integer coercion can merge distinct tokens such as 1 and 01
        _check_duplicates(symbols, number)
        records.append(Record(symbols=symbols, entity=entity))
    return Dataset(DATABASE, records=records)


def ingest(path: Path | str, mode: str) -> Dataset:
    """
    Reads a dataset from a file ("-" reads standard input)

    :param Path, str path: input file
    :param str mode: "timeseries" or "database"
    :return: dataset
    :rtype: Dataset
    """
    text = _read_text(path)
    if mode == TIMESERIES:
        dataset = parse_timeseries(text)
    elif mode == DATABASE:
        dataset = parse_database(text)
    else:
        raise ValueError(f"Unknown dataset mode '{mode}'")

    log_msg = f"Read {dataset.size} {'events' if mode == TIMESERIES else 'records'}"
    log.debug(log_msg)
    return dataset
