from .belief import (
    Observation,
    belief_update,
    estimate_p_ab,
    passes_criterion,
    min_selector,
    belief_trace,
    quick_belief,
)
from .parameters import MiningParams, ConfigurationError
from .rule import Rule, RuleTracker, RuleSet, symbol_sort_key, sort_symbols
