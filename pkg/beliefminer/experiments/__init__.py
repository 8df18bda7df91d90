from .categories import (
    CATEGORIES,
    CategoryCounts,
    categorize_rule,
    categorize_rules,
    extraction_rate,
)
from .sweeps import derive_seed, ow_sweep, selector_sweep
