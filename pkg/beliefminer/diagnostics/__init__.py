from .check_rule_sets import get_rule_set_violations
