from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..components.parameters import MiningParams
from ..data_management.dataset import Dataset
from ..rule_evaluation.filters import apply_filter
from ..rule_evaluation.metrics import score_rules
from ..rule_mining.mine_atomic import mine_atomic
from ..rule_mining.mine_conjunctive import mine_conjunctive
from ..rule_mining.mine_frequent import mine_frm, minsup_for_rule_count
from ..rule_mining.utilities import MiningError
from .graph import build_graph, components
import logging

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PipelineConfig:
    """
    Mining and filtering steps whose routines are compared in the exclusion
    process

    - method: "brm" or "frm"
    - params: mining parameters
    - filter, threshold: filter applied to the scored rules
    - conjunctive: also search conjunctive premises (brm)
    - minsup: fixed minimum support (frm)
    - target_rule_count: if set, the minimum support of every frm run is chosen to
      return this number of rules
    - min_lift: lift threshold of frequent rules (frm)
    """

    method: str = "brm"
    params: MiningParams = field(default_factory=MiningParams)
    filter: str = "none"
    threshold: float | None = None
    conjunctive: bool = False
    minsup: float | None = None
    target_rule_count: int | None = None
    min_lift: float | None = None


@dataclass(frozen=True)
class EntityExclusion:
    """
    Routines found without the data of one entity
    """

    components: int
    missing_components: list
    changed: bool

    @property
    def classification(self) -> str:
        return "active-like" if self.changed else "sedentary-like"


@dataclass
class PepReport:
    """
    Result of the entity exclusion process

    - baseline_components: number of routines on the full data
    - baseline_signatures: symbol sets of these routines
    - per_entity: entity -> EntityExclusion
    """

    baseline_components: int
    baseline_signatures: list
    per_entity: dict = field(default_factory=dict)

    def changed_entities(self) -> list:
        return [e for e, result in self.per_entity.items() if result.changed]

    def to_dict(self) -> dict:
        return {
            "baseline_components": self.baseline_components,
            "baseline_signatures": [list(s) for s in self.baseline_signatures],
            "changed_entities": [str(e) for e in self.changed_entities()],
            "per_entity": {
                str(entity): {
                    "components": result.components,
                    "missing_components": [list(s) for s in result.missing_components],
                    "changed": result.changed,
                    "classification": result.classification,
                }
                for entity, result in self.per_entity.items()
            },
        }


def run_pipeline(dataset: Dataset, pipeline: PipelineConfig) -> list[tuple]:
    """
    Mines, filters and clusters a dataset into routines

    :param Dataset dataset: dataset
    :param PipelineConfig pipeline: pipeline configuration
    :return: routines (weakly connected components)
    :rtype: list
    """
    params = pipeline.params
    if pipeline.method == "brm":
        ruleset = mine_atomic(dataset, params)
        rules = score_rules(ruleset)
        if pipeline.conjunctive:
            rules += score_rules(mine_conjunctive(ruleset, dataset, params))
    elif pipeline.method == "frm":
        minsup = pipeline.minsup if pipeline.minsup is not None else params.minsup
        if pipeline.target_rule_count is not None:
            minsup = minsup_for_rule_count(
                dataset, pipeline.target_rule_count, params
            )
        rules = score_rules(mine_frm(dataset, minsup, params, pipeline.min_lift))
    else:
        raise ValueError(f"Unknown mining method '{pipeline.method}'")

    rules = apply_filter(rules, pipeline.filter, pipeline.threshold)
    return components(build_graph(rules))


def _exclusion_run(args: tuple) -> tuple:
    dataset, pipeline, entity = args
    return entity, run_pipeline(dataset.exclude_entity(entity), pipeline)


def compare_routines(baseline: list[tuple], routines: list[tuple]) -> EntityExclusion:
    """
    Compares routines against the baseline: they changed if their number differs or
    a baseline routine disappeared

    :param list baseline: baseline routines
    :param list routines: routines to compare
    :return: comparison result
    :rtype: EntityExclusion
    """
    found = set(routines)
    missing = [signature for signature in baseline if signature not in found]
    changed = len(routines) != len(baseline) or bool(missing)
    return EntityExclusion(
        components=len(routines), missing_components=missing, changed=changed
    )


def pep_sweep(
    dataset: Dataset, pipeline: PipelineConfig, n_jobs: int = 1
) -> PepReport:
    """
    Entity exclusion process

    Runs the pipeline on the full data and once per entity with that entity's data
    removed. An entity whose removal changes the routines is flagged.

    :param Dataset dataset: dataset with every event or record tagged by entity
    :param PipelineConfig pipeline: pipeline configuration
    :param int n_jobs: number of parallel exclusion runs
    :return: report
    :rtype: PepReport
    """
    entities = dataset.entities()
    if None in entities:
        raise MiningError("E_ENTITY", "Every event or record needs an entity tag")
    if len(entities) < 2:
        raise MiningError(
            "E_ENTITY", "The exclusion process needs at least two entities"
        )

    baseline = run_pipeline(dataset, pipeline)
    report = PepReport(
        baseline_components=len(baseline), baseline_signatures=list(baseline)
    )
    log_msg = f"Baseline routines: {len(baseline)}"
    log.info(log_msg)

    tasks = [(dataset, pipeline, entity) for entity in entities]
    if n_jobs > 1:
        with ProcessPoolExecutor(max_workers=n_jobs) as executor:
            results = list(executor.map(_exclusion_run, tasks))
    else:
        results = [_exclusion_run(task) for task in tasks]

    for entity, routines in results:
        report.per_entity[entity] = compare_routines(baseline, routines)
        log.debug(f"Entity {entity!r} excluded: {report.per_entity[entity]}")

    log_msg = f"Entities changing the routines: {report.changed_entities()}"
    log.info(log_msg)
    return report
