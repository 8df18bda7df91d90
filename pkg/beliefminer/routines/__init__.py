from .graph import RoutineGraph, build_graph, components, export_dot
from .pep import (
    EntityExclusion,
    PepReport,
    PipelineConfig,
    compare_routines,
    pep_sweep,
    run_pipeline,
)
