#!/usr/bin/env python3
"""
Tests for configuration loading and error payloads
"""

import logging

import pytest
import yaml

from Summand_Lab.utils.errors import BadParameters, ConfigurationError, ParseError
from Summand_Lab.utils.settings import (
    DEFAULT_CONFIG_PATH,
    ENV_CONFIG_PATH,
    ENV_DEGREE_BOUND,
    ENV_GB_BUDGET,
    ENV_LOG_LEVEL,
    LabSettings,
    get_settings,
    load_settings,
    reset_settings,
)

# Set up logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    for name in (ENV_CONFIG_PATH, ENV_DEGREE_BOUND, ENV_GB_BUDGET, ENV_LOG_LEVEL):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()


def write_config(tmp_path, data):
    path = tmp_path / "lab_config.yaml"
    path.write_text(yaml.safe_dump(data), encoding="utf-8")
    return str(path)


def test_shipped_config_matches_defaults():
    settings = load_settings(DEFAULT_CONFIG_PATH)
    assert settings == LabSettings()


def test_yaml_values_are_read(tmp_path):
    path = write_config(tmp_path, {
        "groebner": {"s_pair_budget": 10},
        "splitting": {"degree_bound": 5},
        "cli": {"indent": 0, "include_timing": True},
        "logging": {"level": "DEBUG"},
    })
    settings = load_settings(path)
    assert settings.s_pair_budget == 10
    assert settings.splitting_degree_bound == 5
    assert settings.cli_indent == 0
    assert settings.include_timing is True
    assert settings.log_level == "DEBUG"
    assert settings.torus_degree_bound == 10


def test_environment_overrides_yaml(tmp_path, monkeypatch):
    path = write_config(tmp_path, {"groebner": {"s_pair_budget": 10}, "splitting": {"degree_bound": 5}})
    monkeypatch.setenv(ENV_GB_BUDGET, "77")
    monkeypatch.setenv(ENV_DEGREE_BOUND, "3")
    monkeypatch.setenv(ENV_LOG_LEVEL, "WARNING")
    settings = load_settings(path)
    assert settings.s_pair_budget == 77
    assert settings.splitting_degree_bound == 3
    assert settings.log_level == "WARNING"


@pytest.mark.parametrize("value", ["abc", "0", "-4", "2.5"])
def test_bad_environment_values(monkeypatch, value):
    monkeypatch.setenv(ENV_DEGREE_BOUND, value)
    with pytest.raises(ConfigurationError):
        load_settings(DEFAULT_CONFIG_PATH)


def test_invalid_yaml_values(tmp_path):
    path = write_config(tmp_path, {"graded": {"degree_bound": -1}})
    with pytest.raises(ConfigurationError) as info:
        load_settings(path)
    assert info.value.code == "configuration_error"


def test_missing_file_falls_back_to_defaults(tmp_path):
    assert load_settings(str(tmp_path / "absent.yaml")) == LabSettings()


def test_cached_settings_follow_the_config_path(tmp_path, monkeypatch):
    path = write_config(tmp_path, {"torus": {"degree_bound": 4}})
    monkeypatch.setenv(ENV_CONFIG_PATH, path)
    reset_settings()
    assert get_settings().torus_degree_bound == 4
    assert get_settings() is get_settings()


def test_error_payloads():
    error = BadParameters("bad degree", witness={"degree": -1})
    assert error.to_payload() == {"code": "bad_parameters", "message": "bad degree", "witness": {"degree": -1}}
    assert BadParameters("plain").to_payload() == {"code": "bad_parameters", "message": "plain"}
    parse = ParseError("Unexpected character", 3, "x +* y")
    assert parse.position == 3
    assert parse.witness == {"position": 3, "text": "x +* y"}
    assert str(parse) == "Unexpected character at position 3"
