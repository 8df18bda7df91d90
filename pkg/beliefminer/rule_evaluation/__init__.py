from .metrics import (
    ScoredRule,
    confidence,
    bayes_factor,
    score_rules,
    required_selector,
)
from .filters import (
    FILTERS,
    apply_filter,
    filter_confidence,
    filter_bayes_factor,
    filter_best_confidence_per_conclusion,
)
from .odds_ratio import (
    contingency_table,
    odds_ratio,
    odds_ratio_from_table,
    bootstrap_ci,
    bootstrap_table_ci,
    evaluate_odds_ratios,
)
