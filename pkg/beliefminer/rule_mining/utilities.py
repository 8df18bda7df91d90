from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

import numpy as np

from ..components.parameters import MiningParams
from ..components.rule import Rule
from ..data_management.dataset import Dataset, Record, TIMESERIES


class MiningError(ValueError):
    """
    Raised when a mining run cannot be started on the given data and parameters

    :param str category: machine-readable error category
    :param str message: description
    """

    def __init__(self, category: str, message: str):
        self.category = category
        super().__init__(message)


@dataclass(frozen=True)
class ObservationWindow:
    """
    Consecutive events of a timeseries starting at start_index; the first symbol is
    the window head
    """

    start_index: int
    symbols: tuple

    @property
    def head(self):
        return self.symbols[0]

    @property
    def end_index(self) -> int:
        return self.start_index + len(self.symbols)


def check_mining_input(dataset: Dataset, params: MiningParams):
    """
    Checks that a dataset can be mined with the given parameters

    :param Dataset dataset: dataset to mine
    :param MiningParams params: mining parameters
    """
    if dataset is None or dataset.size == 0:
        raise MiningError("E_EMPTY", "Cannot mine an empty dataset")
    if dataset.mode != params.mode:
        raise MiningError(
            "E_CONFIG",
            f"Dataset is in {dataset.mode} mode but the parameters are set to "
            f"{params.mode} mode",
        )
    if dataset.mode == TIMESERIES and params.ow is None:
        raise MiningError(
            "E_CONFIG", "An observation window (ow) is required in timeseries mode"
        )


def window_ends(dataset: Dataset, params: MiningParams) -> np.ndarray:
    """
    Exclusive end index of the observation window starting at every event

    Windows advance one symbol at a time and are truncated at the end of the
    entity segment. In symbol units a window holds ow events; in time units it holds
    all events with t < t_head + ow.

    :param Dataset dataset: timeseries
    :param MiningParams params: parameters holding ow and its unit
    :return: array of window end indices
    :rtype: np.ndarray
    """
    ends = np.empty(dataset.size, dtype=np.int64)
    timestamps = dataset.timestamps
    for start, end in dataset.segments():
        starts = np.arange(start, end)
        if params.window_unit == "time":
            segment_times = timestamps[start:end]
            ends[start:end] = start + np.searchsorted(
                segment_times, segment_times + params.ow, side="left"
            )
        else:
            ends[start:end] = np.minimum(starts + params.ow, end)
    return ends


def iterate_windows(
    dataset: Dataset, params: MiningParams
) -> Iterator[ObservationWindow]:
    """
    Yields the observation windows of a timeseries in stream order

    :param Dataset dataset: timeseries
    :param MiningParams params: parameters holding ow
    :return: observation windows
    """
    symbols = dataset.symbols
    for start, end in enumerate(window_ends(dataset, params)):
        yield ObservationWindow(start_index=start, symbols=tuple(symbols[start:end]))


def get_transactions(
    dataset: Dataset, params: MiningParams = None
) -> list[tuple[frozenset, frozenset]]:
    """
    Premise side and conclusion side of every transaction of the dataset

    A record is one transaction with the same symbols on both sides. In a
    timeseries every observation window is a transaction anchored at its head: the
    premise side is the head, the conclusion side the later symbols of the window,
    so a rule a -> b occurs in exactly the windows where BRM would pair it.

    :param Dataset dataset: dataset
    :param MiningParams params: parameters holding ow (timeseries only)
    :return: list of (premise symbols, conclusion symbols)
    :rtype: list
    """
    if dataset.mode != TIMESERIES:
        return [(r.symbol_set, r.symbol_set) for r in dataset.records]
    if params is None or params.ow is None:
        raise MiningError(
            "E_CONFIG", "An observation window (ow) is required in timeseries mode"
        )
    transactions = []
    for window in iterate_windows(dataset, params):
        rest = set(window.symbols[1:])
        if not params.self_rules:
            rest.discard(window.head)
        transactions.append((frozenset([window.head]), frozenset(rest)))
    return transactions


def select_candidate_rules(
    t: ObservationWindow | Record, mode: str = None, self_rules: bool = False
) -> set[Rule]:
    """
    Candidate rules of one step of the mining pass

    For a window, the head is paired with every distinct later symbol; for a record,
    all ordered pairs of its symbols are candidates.

    :param t: observation window or record
    :param str mode: "timeseries" or "database"; derived from t if not given
    :param bool self_rules: also pair the head with later occurrences of itself
    :return: candidate atomic rules
    :rtype: set
    """
    if mode is None:
        mode = TIMESERIES if isinstance(t, ObservationWindow) else "database"

    if mode == TIMESERIES:
        head = t.symbols[0]
        return {
            Rule.atomic(head, x)
            for x in set(t.symbols[1:])
            if x != head or self_rules
        }
    return {Rule.atomic(a, b) for a, b in permutations(t.symbols, 2)}
