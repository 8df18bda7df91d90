import math
from dataclasses import dataclass
from typing import Hashable

import numpy as np

from ..components.rule import Symbol, sort_symbols

TIMESERIES = "timeseries"
DATABASE = "database"


@dataclass(frozen=True)
class Event:
    """
    One symbol of a timeseries, observed at time t (sample index or milliseconds)
    """

    symbol: Symbol
    t: float
    entity: Hashable = None

    def __post_init__(self):
        if self.symbol is None or self.symbol == "":
            raise ValueError("Event symbols cannot be empty")
        if not math.isfinite(self.t):
            raise ValueError(f"Event time needs to be finite, got {self.t}")


@dataclass(frozen=True)
class Record:
    """
    One row of a database: a non-empty set of distinct symbols
    """

    symbols: tuple
    entity: Hashable = None

    def __post_init__(self):
        symbols = tuple(self.symbols)
        if not symbols:
            raise ValueError("Records cannot be empty")
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"Record {symbols} contains duplicate symbols")
        object.__setattr__(self, "symbols", symbols)

    @property
    def symbol_set(self) -> frozenset:
        return frozenset(self.symbols)


class Dataset:
    """
    Data to mine: either a timestamped symbol stream (timeseries mode) or a list of
    records (database mode)

    Events tagged with an entity are grouped per entity (in order of first
    appearance); every entity forms its own segment and observation windows never
    cross segments.

    :param str mode: "timeseries" or "database"
    :param list events: events of a timeseries
    :param list records: records of a database
    """

    def __init__(self, mode: str, events: list = None, records: list = None):
        """
        Constructor
        """
        events = list(events) if events else []
        records = list(records) if records else []
        if mode == TIMESERIES:
            if records:
                raise ValueError("A timeseries dataset cannot hold records")
            events = self._group_by_entity(events)
        elif mode == DATABASE:
            if events:
                raise ValueError("A database dataset cannot hold events")
        else:
            raise ValueError(f"Unknown dataset mode '{mode}'")

        self.mode = mode
        self.events = events
        self.records = records
        self._segments = None

        if self.size == 0:
            raise ValueError("A dataset needs at least one event or record")

    @classmethod
    def from_symbols(cls, symbols: list, entity: Hashable = None) -> "Dataset":
        """
        Creates a timeseries with time stamps 0, 1, 2, ... from a list of symbols

        :param list symbols: symbol stream
        :param entity: optional entity tag of all events
        :return: timeseries dataset
        :rtype: Dataset
        """
        events = [Event(symbol=s, t=i, entity=entity) for i, s in enumerate(symbols)]
        return cls(TIMESERIES, events=events)

    @classmethod
    def from_records(cls, records: list) -> "Dataset":
        """
        Creates a database from iterables of symbols or Record objects

        :param list records: records
        :return: database dataset
        :rtype: Dataset
        """
        records = [r if isinstance(r, Record) else Record(tuple(r)) for r in records]
        return cls(DATABASE, records=records)

    @staticmethod
    def _group_by_entity(events: list) -> list:
        groups = {}
        for event in events:
            groups.setdefault(event.entity, []).append(event)
        for entity, group in groups.items():
            times = [e.t for e in group]
            if any(later < earlier for earlier, later in zip(times, times[1:])):
                raise ValueError(
                    f"Events of entity {entity!r} are not sorted by time stamp"
                )
        return [event for group in groups.values() for event in group]

    @property
    def size(self) -> int:
        """
        |D|: number of events or records
        """
        return len(self.events) if self.mode == TIMESERIES else len(self.records)

    @property
    def symbols(self) -> list:
        """
        Symbol stream of a timeseries
        """
        return [e.symbol for e in self.events]

    @property
    def timestamps(self) -> np.ndarray:
        return np.array([e.t for e in self.events], dtype=float)

    def segments(self) -> list[tuple[int, int]]:
        """
        Index ranges [start, end) of the per-entity segments of a timeseries

        :return: list of segment ranges
        :rtype: list
        """
        if self._segments is None:
            segments = []
            start = 0
            for i in range(1, len(self.events) + 1):
                if (
                    i == len(self.events)
                    or self.events[i].entity != self.events[start].entity
                ):
                    segments.append((start, i))
                    start = i
            self._segments = segments
        return self._segments

    def vocabulary(self) -> tuple:
        """
        All distinct symbols, canonically sorted
        """
        if self.mode == TIMESERIES:
            return sort_symbols({e.symbol for e in self.events})
        return sort_symbols({s for r in self.records for s in r.symbols})

    def entities(self) -> list:
        """
        Distinct entity tags in order of first appearance (None if untagged)
        """
        items = self.events if self.mode == TIMESERIES else self.records
        return list(dict.fromkeys(item.entity for item in items))

    def exclude_entity(self, entity: Hashable) -> "Dataset":
        """
        Returns a copy of the dataset without the data of one entity

        :param entity: entity to exclude
        :return: reduced dataset
        :rtype: Dataset
        """
        if self.mode == TIMESERIES:
            events = [e for e in self.events if e.entity != entity]
            return Dataset(TIMESERIES, events=events)
        records = [r for r in self.records if r.entity != entity]
        return Dataset(DATABASE, records=records)

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return (
            self.mode == other.mode
            and self.events == other.events
            and self.records == other.records
        )

    def __repr__(self):
        return f"Dataset(mode={self.mode!r}, size={self.size})"
