from .save_results import (
    build_metadata,
    emit_rules,
    metadata_footer,
    rule_to_dict,
    write_database,
    write_dot,
    write_pep_report,
    write_summary,
    write_table,
    write_timeseries,
)
from .read_results import (
    read_metadata,
    read_rules,
    read_table,
    rule_from_dict,
    strip_comments,
)
from .utilities import (
    create_save_folder,
    create_unique_folder_name,
    result_folder_name,
)
