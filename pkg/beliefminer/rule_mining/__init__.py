from .utilities import (
    MiningError,
    ObservationWindow,
    get_transactions,
    iterate_windows,
    select_candidate_rules,
    window_ends,
)
from .mine_atomic import mine_atomic, cross_check_rules, quick_update_belief
from .mine_conjunctive import mine_conjunctive, group_premises
from .mine_frequent import (
    FrequentItemset,
    candidate_rule_supports,
    lift,
    mine_frm,
    minsup_for_rule_count,
    support,
)
