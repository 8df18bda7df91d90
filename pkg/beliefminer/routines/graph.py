import networkx as nx

from ..components.rule import RuleSet, Symbol, sort_symbols, symbol_sort_key
from ..rule_evaluation.metrics import ScoredRule, score_rules


class RoutineGraph:
    """
    Directed multigraph over the symbols of retained rules

    Every rule contributes one edge per premise symbol to its conclusion. The node
    set is exactly the set of symbols appearing in the rules.

    :param nx.MultiDiGraph graph: underlying graph, edges carry the scored rule
    """

    def __init__(self):
        """
        Constructor
        """
        self.graph = nx.MultiDiGraph()

    def add_rule(self, rule: ScoredRule):
        for conclusion in rule.conclusion:
            for premise in rule.premise:
                self.graph.add_edge(premise, conclusion, key=rule.rule, rule=rule)

    @property
    def nodes(self) -> tuple:
        return sort_symbols(self.graph.nodes)

    @property
    def edges(self) -> list[tuple[Symbol, Symbol, ScoredRule]]:
        edges = [(u, v, data["rule"]) for u, v, data in self.graph.edges(data=True)]
        return sorted(
            edges,
            key=lambda e: (
                symbol_sort_key(e[0]),
                symbol_sort_key(e[1]),
                e[2].rule.sort_key,
            ),
        )

    def __len__(self) -> int:
        return self.graph.number_of_nodes()


def build_graph(rules: list[ScoredRule] | RuleSet) -> RoutineGraph:
    """
    Builds the rule graph of a set of rules

    :param rules: scored rules, or a rule set that is scored first
    :return: rule graph
    :rtype: RoutineGraph
    """
    if isinstance(rules, RuleSet):
        rules = score_rules(rules)
    g = RoutineGraph()
    for rule in sorted(rules, key=lambda r: r.rule.sort_key):
        g.add_rule(rule)
    return g


def components(g: RoutineGraph) -> list[tuple]:
    """
    Routines of a rule graph: its weakly connected components, sorted by size
    (largest first) and then by their smallest symbol

    :param RoutineGraph g: rule graph
    :return: list of canonically sorted symbol tuples
    :rtype: list
    """
    routines = [sort_symbols(c) for c in nx.weakly_connected_components(g.graph)]
    return sorted(routines, key=lambda c: (-len(c), symbol_sort_key(c[0])))


def _quote(symbol: Symbol) -> str:
    text = str(symbol).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{text}"'


def export_dot(g: RoutineGraph, name: str = "routines") -> str:
    """
    DOT representation of a rule graph with stable ordering

    Node labels are the symbols, the edge label is the rule confidence rounded to
    three decimals.

    :param RoutineGraph g: rule graph
    :param str name: graph name
    :return: DOT source
    :rtype: str
    """
    lines = [f"digraph {_quote(name)} {{"]
    for node in g.nodes:
        lines.append(f"    {_quote(node)};")
    for u, v, rule in g.edges:
        lines.append(
            f'    {_quote(u)} -> {_quote(v)} [label="{rule.confidence:.3f}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
