from .template_creation import (
    create_mining_templates,
    initialize_configuration_templates,
)
from .synthetic_data import (
    GeneratorConfig,
    combine_entity_datasets,
    generate_timeseries,
)
