from .components.parameters import ConfigurationError, MiningParams
from .data_preprocessing.synthetic_data import GeneratorConfig
from .routines.pep import PipelineConfig


def get_config_value(config: dict, section: str, key: str = None):
    """
    Returns a value of the nested mining configuration

    :param dict config: config dict
    :param str section: section of the configuration (or a top-level entry)
    :param str key: entry of the section
    :return: configured value
    """
    try:
        entry = config[section] if key is None else config[section][key]
        return entry["value"]
    except (KeyError, TypeError) as err:
        name = section if key is None else f"{section}.{key}"
        raise ConfigurationError(
            f"The configuration has no value for '{name}'"
        ) from err


def get_mining_parameters(config: dict) -> MiningParams:
    """
    Converts the mining configuration into validated mining parameters

    :param dict config: config dict
    :return: mining parameters
    :rtype: MiningParams
    """
    mining = "mining"
    params = MiningParams(
        mode=get_config_value(config, mining, "mode"),
        prior=get_config_value(config, mining, "prior"),
        selector=get_config_value(config, mining, "selector"),
        ow=get_config_value(config, mining, "observation_window"),
        window_unit=get_config_value(config, mining, "window_unit"),
        self_rules=bool(get_config_value(config, mining, "self_rules")),
        confidence_threshold=get_config_value(
            config, "filtering", "confidence_threshold"
        ),
        bayes_factor_threshold=get_config_value(
            config, "filtering", "bayes_factor_threshold"
        ),
        minsup=get_config_value(config, "frequent", "minsup"),
        rng_seed=get_config_value(config, "seed"),
    )
    return params


def get_filter_threshold(config: dict) -> float | None:
    """
    Threshold of the configured filter, None for filters without threshold

    :param dict config: config dict
    :return: threshold
    """
    name = get_config_value(config, "filtering", "filter").replace("-", "_")
    if name == "confidence":
        return get_config_value(config, "filtering", "confidence_threshold")
    if name == "bayes_factor":
        return get_config_value(config, "filtering", "bayes_factor_threshold")
    return None


def get_generator_config(config: dict) -> GeneratorConfig:
    """
    Converts the synthetic section of the configuration into a generator
    configuration

    :param dict config: config dict
    :return: generator configuration
    :rtype: GeneratorConfig
    """
    synthetic = "synthetic"
    try:
        return GeneratorConfig(
            v_random=tuple(get_config_value(config, synthetic, "v_random")),
            chain=tuple(get_config_value(config, synthetic, "chain")),
            n_random=get_config_value(config, synthetic, "n_random"),
            n_chains=get_config_value(config, synthetic, "n_chains"),
            gap_range=(
                get_config_value(config, synthetic, "gap_min"),
                get_config_value(config, synthetic, "gap_max"),
            ),
            seed=get_config_value(config, "seed"),
        )
    except ValueError as err:
        raise ConfigurationError(str(err)) from err


def get_pipeline_config(config: dict) -> PipelineConfig:
    """
    Mining and filtering steps of the configuration, as compared by the entity
    exclusion process

    :param dict config: config dict
    :return: pipeline configuration
    :rtype: PipelineConfig
    """
    target_rule_count = get_config_value(config, "frequent", "target_rule_count")
    min_lift = get_config_value(config, "frequent", "min_lift")
    return PipelineConfig(
        method=get_config_value(config, "mining", "method"),
        params=get_mining_parameters(config),
        filter=get_config_value(config, "filtering", "filter"),
        threshold=get_filter_threshold(config),
        conjunctive=bool(get_config_value(config, "mining", "conjunctive")),
        minsup=get_config_value(config, "frequent", "minsup"),
        target_rule_count=target_rule_count if target_rule_count > 0 else None,
        min_lift=min_lift if min_lift >= 0 else None,
    )
