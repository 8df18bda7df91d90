from dataclasses import dataclass

import numpy as np

from ..data_management.dataset import Dataset, Event, TIMESERIES
import logging

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorConfig:
    """
    Configuration of the two-process timeseries generator

    A random process emits symbols of v_random uniformly; a chain process emits the
    symbols of chain in order, with the distance between consecutive chain symbols
    drawn uniformly from gap_range (a distance of 1 means adjacent). Chains do not
    overlap and the positions in between are filled by the random process.

    - v_random: vocabulary of the random process
    - chain: ordered symbols of the chain process
    - n_random: number of random symbols
    - n_chains: number of chain emissions
    - gap_range: inclusive range of distances between chain symbols
    - seed: seed of the generator
    """

    v_random: tuple = (0, 1, 2, 3)
    chain: tuple = (10, 11, 12)
    n_random: int = 1000
    n_chains: int = 20
    gap_range: tuple = (1, 10)
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "v_random", tuple(self.v_random))
        object.__setattr__(self, "chain", tuple(self.chain))
        object.__setattr__(self, "gap_range", tuple(self.gap_range))
        if not self.v_random:
            raise ValueError("The random vocabulary cannot be empty")
        if set(self.v_random) & set(self.chain):
            raise ValueError("Random and chain vocabularies need to be disjoint")
        if self.n_random < 0 or self.n_chains < 0:
            raise ValueError("Symbol and chain counts cannot be negative")
        if self.n_chains > 0 and not self.chain:
            raise ValueError("Chains need at least one symbol")
        low, high = self.gap_range
        if not 1 <= low <= high:
            raise ValueError(f"Invalid gap range {self.gap_range}")

    @property
    def stream_length(self) -> int:
        return self.n_random + self.n_chains * len(self.chain)

    @property
    def chain_vocabulary(self) -> tuple:
        return tuple(dict.fromkeys(self.chain))


def generate_timeseries(cfg: GeneratorConfig, entity=None) -> Dataset:
    """
    Generates a timeseries of the random process with embedded chain emissions

    Chains are placed one after another, each at a start position drawn uniformly
    from the positions where its span does not overlap a placed chain.

    :param GeneratorConfig cfg: generator configuration
    :param entity: optional entity tag of all events
    :return: timeseries with time stamps 0, 1, 2, ...
    :rtype: Dataset
    """
    rng = np.random.default_rng(cfg.seed)
    length = cfg.stream_length
    stream = np.full(length, -1, dtype=np.int64)
    occupied = np.zeros(length, dtype=bool)
    low, high = cfg.gap_range

    for _ in range(cfg.n_chains):
        gaps = rng.integers(low, high + 1, size=len(cfg.chain) - 1)
        offsets = np.concatenate([[0], np.cumsum(gaps)])
        span = int(offsets[-1]) + 1

        feasible = np.array([], dtype=np.int64)
        if span <= length:
            cumulative = np.concatenate([[0], np.cumsum(occupied)])
            overlap = cumulative[span:] - cumulative[:-span]
            feasible = np.flatnonzero(overlap == 0)
        if feasible.size == 0:
            raise ValueError(
                f"Cannot place {cfg.n_chains} non-overlapping chains in a stream of "
                f"{length} symbols"
            )
        start = int(rng.choice(feasible))
        occupied[start : start + span] = True
        stream[start + offsets] = np.arange(len(cfg.chain))

    random_positions = np.flatnonzero(stream < 0)
    draws = rng.integers(0, len(cfg.v_random), size=random_positions.size)

    symbols = [None] * length
    for position, k in zip(np.flatnonzero(stream >= 0), stream[stream >= 0]):
        symbols[position] = cfg.chain[k]
    for position, k in zip(random_positions, draws):
        symbols[position] = cfg.v_random[k]

    log.debug(f"Generated stream of {length} symbols with {cfg.n_chains} chains")
    return Dataset.from_symbols(symbols, entity=entity)


def combine_entity_datasets(datasets: dict) -> Dataset:
    """
    Merges timeseries of several entities into one dataset, tagging every event
    with its entity

    :param dict datasets: entity -> timeseries
    :return: entity-tagged timeseries
    :rtype: Dataset
    """
    events = [
        Event(symbol=e.symbol, t=e.t, entity=entity)
        for entity, dataset in datasets.items()
        for e in dataset.events
    ]
    return Dataset(TIMESERIES, events=events)
