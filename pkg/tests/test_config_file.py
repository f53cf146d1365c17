import pytest

from bench.schemas import ExperimentConfig, build_experiment_config
from errors import ConfigError
from infrastructure.config_file import load_config_file, parse_key_value_text, parse_yaml_text
from models import EntropySpec


def test_key_value_text_strips_comments_and_normalizes_keys():
    text = """
    # benchmark setup
    experiment = register
    search-window = 4   # small grid
    families = shannon, renyi:2.0
    """

    values = parse_key_value_text(text)

    assert values == {
        "experiment": "register",
        "search_window": "4",
        "families": "shannon, renyi:2.0",
    }


def test_key_value_text_rejects_malformed_and_duplicate_lines():
    with pytest.raises(ConfigError, match="expected 'key = value'"):
        parse_key_value_text("seed 7", "bench.conf")
    with pytest.raises(ConfigError, match="duplicate key 'seed'"):
        parse_key_value_text("seed = 1\nseed = 2")


def test_yaml_text_must_be_a_flat_mapping():
    assert parse_yaml_text("seed: 3\nmi-bins: [32, 64]\n") == {"seed": 3, "mi_bins": [32, 64]}
    assert parse_yaml_text("") == {}
    with pytest.raises(ConfigError, match="mapping"):
        parse_yaml_text("- 1\n- 2\n")
    with pytest.raises(ConfigError, match="scalar or a list"):
        parse_yaml_text("fixture:\n  size: 3\n")
    with pytest.raises(ConfigError, match="invalid YAML"):
        parse_yaml_text("seed: [1, 2\n")


def test_load_config_file_dispatches_on_suffix(tmp_path):
    conf = tmp_path / "bench.conf"
    conf.write_text("seed = 11\n", encoding="utf-8")
    yml = tmp_path / "bench.yml"
    yml.write_text("seed: 11\n", encoding="utf-8")

    assert load_config_file(conf) == {"seed": "11"}
    assert load_config_file(yml) == {"seed": 11}
    with pytest.raises(ConfigError, match="cannot read"):
        load_config_file(tmp_path / "missing.conf")


def test_defaults_are_valid():
    config = ExperimentConfig()

    assert config.experiments == ("threshold", "register", "cluster")
    assert config.families == ["shannon", "renyi:2", "tsallis:2"]
    assert config.timings is False
    assert config.format == "csv"


def test_text_values_are_coerced_and_families_normalized():
    values = parse_key_value_text(
        "experiment = cluster\nfamilies = Shannon, renyi:2.0, renyi:2\nsigma_sweep = 0.05, 0.1\n"
        "timings = true\n"
    )

    config = build_experiment_config(values)

    assert config.experiments == ("cluster",)
    assert config.families == ["shannon", "renyi:2"]
    assert config.sigma_sweep == [0.05, 0.1]
    assert config.timings is True


def test_overrides_win_and_none_is_ignored():
    config = build_experiment_config({"seed": "3", "jobs": "2"}, {"seed": 9, "jobs": None})

    assert config.seed == 9
    assert config.jobs == 2


def test_order_sweep_expands_generalized_families_only():
    config = build_experiment_config({"families": "shannon,renyi:2,tsallis:2", "order_sweep": "0.5,3"})

    assert config.specs() == [
        EntropySpec.shannon(),
        EntropySpec.renyi(0.5),
        EntropySpec.renyi(3.0),
        EntropySpec.tsallis(0.5),
        EntropySpec.tsallis(3.0),
    ]


def test_invalid_configs_raise_config_error():
    with pytest.raises(ConfigError, match="unknown"):
        build_experiment_config({"unknown_key": 1})
    with pytest.raises(ConfigError, match="entropy family"):
        build_experiment_config({"families": "gini"})
    with pytest.raises(ConfigError, match="bins"):
        build_experiment_config({"mi_bins": "48"})
    with pytest.raises(ConfigError, match="background_mean"):
        build_experiment_config({"background_mean": 200, "foreground_mean": 100})
    with pytest.raises(ConfigError, match="guard band"):
        build_experiment_config({"order_sweep": "1.0"})
    with pytest.raises(ConfigError, match="odd"):
        build_experiment_config({"local_window": 4})
    with pytest.raises(ConfigError, match="local_window must not exceed threshold_size"):
        build_experiment_config({"local_window": 33, "threshold_size": 32})
    with pytest.raises(ConfigError, match="jobs"):
        build_experiment_config({"jobs": 0})
