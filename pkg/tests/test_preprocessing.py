import pytest

import beliefminer.data_preprocessing as dp
from beliefminer.components import ConfigurationError, MiningParams
from beliefminer.utilities import (
    get_config_value,
    get_filter_threshold,
    get_generator_config,
    get_mining_parameters,
    get_pipeline_config,
)
from tests.utilities import load_json, save_json


@pytest.mark.data_preprocessing
def test_create_mining_templates(request, capsys):
    """
    Tests standard behavior of
    - create_mining_templates
    - initialize_configuration_templates
    - an existing configuration is not overwritten
    """
    data_folder_path = request.config.data_folder_path
    dp.create_mining_templates(data_folder_path)

    config_path = data_folder_path / "ConfigMining.json"
    configuration = load_json(config_path)
    assert configuration == dp.initialize_configuration_templates()
    for section in ("mining", "frequent", "filtering", "evaluation", "synthetic"):
        assert section in configuration

    configuration["mining"]["prior"]["value"] = 0.3
    save_json(configuration, config_path)
    dp.create_mining_templates(str(data_folder_path))
    assert "File already exists" in capsys.readouterr().out
    assert load_json(config_path)["mining"]["prior"]["value"] == 0.3


@pytest.mark.data_preprocessing
def test_template_defaults():
    """
    Tests that the default configuration converts into the default parameters
    - mining parameters with an observation window of 10
    - the default generator configuration
    - a confidence filter at 0.5 without frequent rule count target
    """
    configuration = dp.initialize_configuration_templates()

    assert get_mining_parameters(configuration) == MiningParams(ow=10)
    assert get_generator_config(configuration) == dp.GeneratorConfig()
    assert get_filter_threshold(configuration) == 0.5

    pipeline = get_pipeline_config(configuration)
    assert pipeline.method == "brm"
    assert pipeline.filter == "confidence"
    assert pipeline.target_rule_count is None
    assert pipeline.min_lift is None
    assert not pipeline.conjunctive


@pytest.mark.data_preprocessing
def test_configuration_errors():
    """
    Tests that missing or invalid configuration values raise ConfigurationError
    """
    configuration = dp.initialize_configuration_templates()
    assert get_config_value(configuration, "seed") == 0
    with pytest.raises(ConfigurationError):
        get_config_value(configuration, "mining", "missing")
    with pytest.raises(ConfigurationError):
        get_config_value(configuration, "missing")

    configuration["mining"]["prior"]["value"] = 1.0
    with pytest.raises(ConfigurationError):
        get_mining_parameters(configuration)

    configuration = dp.initialize_configuration_templates()
    configuration["synthetic"]["gap_min"]["value"] = 0
    with pytest.raises(ConfigurationError):
        get_generator_config(configuration)

    configuration = dp.initialize_configuration_templates()
    configuration["filtering"]["filter"]["value"] = "best-confidence"
    assert get_filter_threshold(configuration) is None
    configuration["filtering"]["filter"]["value"] = "bayes-factor"
    assert get_filter_threshold(configuration) == 1.0
