import logging
from .mininghub import MiningHub as MiningHub
from .components import MiningParams, Rule, RuleSet
from .data_management import Dataset, DataHandle, ingest
from .result_management import emit_rules, read_rules
from .diagnostics import get_rule_set_violations
from .data_preprocessing import *
from .version import __version__

logger = logging.getLogger("beliefminer")
logger.setLevel(logging.DEBUG)

# Stream Handler to control console output
ch = logging.StreamHandler()
ch.setLevel(logging.INFO)
logger.addHandler(ch)
