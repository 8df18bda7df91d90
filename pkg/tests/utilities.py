import json
import random
from collections import Counter
from itertools import combinations
from pathlib import Path

from beliefminer.components import Rule, passes_criterion
from beliefminer.data_management import Dataset, Record

# Database with exactly five rules of P(a|b) >= 0.5: b -> a, a -> b, d -> c,
# c -> d (at the boundary) and f -> e
FIVE_RULE_DATABASE = (
    [("a", "b")] * 3
    + [("b",)]
    + [("c", "d")] * 2
    + [("d",)] * 2
    + [("e", "f")]
    + [("e",)]
    + [("f",)] * 2
)

ORDER_FIXTURE = [
    ("a", "b", "c"),
    ("a", "b"),
    ("b", "c"),
    ("a",),
    ("c", "d"),
    ("b", "d"),
]


def load_json(folder_path: Path) -> dict:
    """
    Loads json to a dict

    :param Path folder_path: folder path to save to
    :return: dict read from folder_path
    :rtype: dict
    """
    with open(folder_path, "r") as json_file:
        return json.load(json_file)


def save_json(d: dict, folder_path: Path):
    """
    Save dict to folder path as json

    :param dict d: dict to save
    :param Path folder_path: folder path to save to
    """
    with open(folder_path, "w") as f:
        json.dump(d, f, indent=4)


def make_database(records: list, entity=None) -> Dataset:
    """
    Creates a database from tuples of symbols

    :param list records: records as tuples of symbols
    :param entity: entity tag of all records
    :return: database
    :rtype: Dataset
    """
    return Dataset.from_records([Record(tuple(r), entity=entity) for r in records])


def make_random_records(
    rng: random.Random, n_symbols: int = 8, max_records: int = 40
) -> list:
    """
    Random records over the symbols 0..n_symbols-1

    :param random.Random rng: random generator
    :param int n_symbols: vocabulary size
    :param int max_records: largest number of records
    :return: list of symbol tuples
    :rtype: list
    """
    records = []
    for _ in range(rng.randint(1, max_records)):
        size = rng.randint(1, min(4, n_symbols))
        records.append(tuple(rng.sample(range(n_symbols), size)))
    return records


def brute_force_database_counts(records: list) -> tuple[Counter, Counter]:
    """
    Rule counts (records holding premise and conclusion) and symbol counts of a
    database, without any mining logic

    :param list records: list of symbol tuples
    :return: (rule counts keyed by (a, b), symbol counts)
    :rtype: tuple
    """
    rule_counts = Counter()
    symbol_counts = Counter()
    for record in records:
        symbol_counts.update(set(record))
        for a in set(record):
            for b in set(record):
                if a != b:
                    rule_counts[(a, b)] += 1
    return rule_counts, symbol_counts


def brute_force_window_counts(
    symbols: list, ow: int, self_rules: bool = True
) -> tuple[Counter, Counter]:
    """
    Rule counts of a symbol stream: the head of every window is paired with the
    earliest occurrence of each later symbol that the rule did not pair before

    :param list symbols: symbol stream
    :param int ow: observation window in symbols
    :param bool self_rules: pair the head with later occurrences of itself
    :return: (rule counts keyed by (a, b), symbol counts)
    :rtype: tuple
    """
    paired = {}
    rule_counts = Counter()
    for start, head in enumerate(symbols):
        end = min(start + ow, len(symbols))
        for x in set(symbols[start + 1 : end]):
            if x == head and not self_rules:
                continue
            used = paired.setdefault((head, x), set())
            for j in range(start + 1, end):
                if symbols[j] == x and j not in used:
                    used.add(j)
                    rule_counts[(head, x)] += 1
                    break
    return rule_counts, Counter(symbols)


def oracle_rules(rule_counts: Counter, symbol_counts: Counter, s: float = 1.0) -> set:
    """
    Atomic rules passing the increasing belief criterion on final counts

    :param Counter rule_counts: rule counts keyed by (a, b)
    :param Counter symbol_counts: symbol counts
    :param float s: selector
    :return: set of rules
    :rtype: set
    """
    return {
        Rule.atomic(a, b)
        for (a, b), count in rule_counts.items()
        if count > 0 and passes_criterion(count, symbol_counts[b], s)
    }


def brute_force_conjunctive_rules(records: list, s: float = 1.0) -> set:
    """
    Every rule with a premise of two or more symbols and one conclusion passing the
    criterion, by enumerating the full lattice of each record database

    :param list records: list of symbol tuples
    :param float s: selector
    :return: set of rules
    :rtype: set
    """
    vocabulary = sorted({symbol for record in records for symbol in record})
    record_sets = [set(record) for record in records]
    rules = set()
    for conclusion in vocabulary:
        conclusion_count = sum(conclusion in r for r in record_sets)
        others = [v for v in vocabulary if v != conclusion]
        for size in range(2, len(others) + 1):
            for premise in combinations(others, size):
                count = sum(
                    conclusion in r and set(premise) <= r for r in record_sets
                )
                if count > 0 and passes_criterion(count, conclusion_count, s):
                    rules.add(Rule(premise, (conclusion,)))
    return rules


def union_find_components(nodes: list, edges: list) -> set:
    """
    Connected components of an undirected graph by union-find

    :param list nodes: nodes
    :param list edges: (u, v) pairs
    :return: set of frozensets
    :rtype: set
    """
    parent = {node: node for node in nodes}

    def find(node):
        while parent[node] != node:
            parent[node] = parent[parent[node]]
            node = parent[node]
        return node

    for u, v in edges:
        parent[find(u)] = find(v)

    groups = {}
    for node in nodes:
        groups.setdefault(find(node), set()).add(node)
    return {frozenset(group) for group in groups.values()}
