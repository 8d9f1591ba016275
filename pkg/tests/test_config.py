"""Tests for configuration loading, overrides and persistence."""

from pathlib import Path

import pytest
import sympy
import yaml
from pydantic import ValidationError

from symplectic_index.core.config import ConfigManager, get_default_config, get_fast_config
from symplectic_index.core.config.manager import env_overrides, merge
from symplectic_index.core.novikov.lattice import to_rational
from symplectic_index.models.config import SUITE_NAMES, Config, RunConfig


@pytest.fixture
def config_file(tmp_path: Path) -> Path:
    return tmp_path / "sympidx" / "config.yaml"


@pytest.mark.unit
class TestConfigModel:
    def test_defaults(self) -> None:
        config = get_default_config()
        assert config.numerics.tol == 1e-9
        assert config.numerics.grid == 4096
        assert config.suite.seed == 0xC0FFEE
        assert config.suite.suites == SUITE_NAMES
        assert config.suite.trials is None
        assert config.suite.dims is None
        assert config.novikov.sample_lambdas == ["5/4", "3/2", "2"]
        assert config.output.format == "text"
        assert config.log_level == "WARNING"

    def test_fast_config(self) -> None:
        config = get_fast_config()
        assert config.numerics.grid == 1024
        assert config.suite.trials == 5
        assert config.suite.dims == [1]

    @pytest.mark.parametrize(
        "section, values",
        [
            ("suite", {"dims": [0]}),
            ("suite", {"dims": []}),
            ("suite", {"suites": ["nonsense"]}),
            ("novikov", {"sample_lambdas": ["1"]}),
            ("novikov", {"sample_lambdas": ["abc"]}),
            ("novikov", {"sample_lambdas": ["1/0"]}),
            ("novikov", {"sample_lambdas": ["3/4"]}),
            ("output", {"format": "html"}),
            ("numerics", {"grid": 10}),
        ],
    )
    def test_invalid_sections(self, section: str, values: dict) -> None:
        with pytest.raises(ValidationError):
            Config(**{section: values})

    def test_lambdas_parse_like_the_lattice(self) -> None:
        lambdas = ["7/5", "1.5", "2"]
        config = Config(novikov={"sample_lambdas": lambdas})
        assert [to_rational(text) for text in config.novikov.sample_lambdas] == [
            sympy.Rational(7, 5),
            sympy.Rational(3, 2),
            sympy.Integer(2),
        ]

    def test_log_level_is_normalized(self) -> None:
        assert Config(log_level="debug").log_level == "DEBUG"
        with pytest.raises(ValidationError):
            Config(log_level="chatty")

    def test_unknown_top_level_key(self) -> None:
        with pytest.raises(ValidationError):
            Config(providers={})

    def test_with_overrides_ignores_none(self) -> None:
        config = get_default_config().with_overrides(numerics={"tol": 1e-8, "grid": None})
        assert config.numerics.tol == 1e-8
        assert config.numerics.grid == 4096


@pytest.mark.unit
class TestRunConfig:
    def test_apply_layers_flags(self) -> None:
        run = RunConfig(command="suite", seed=7, trials=3, grid=512, format="records")
        config = run.apply(get_default_config())
        assert config.suite.seed == 7
        assert config.suite.trials == 3
        assert config.numerics.grid == 512
        assert config.numerics.tol == 1e-9
        assert config.output.format == "records"

    def test_apply_without_flags_is_identity(self) -> None:
        config = get_fast_config()
        assert RunConfig(command="index").apply(config) == config

    def test_invalid_flavor(self) -> None:
        with pytest.raises(ValidationError):
            RunConfig(command="index", flavor="hamiltonian")

    def test_unknown_field(self) -> None:
        with pytest.raises(ValidationError):
            RunConfig(command="index", verbose=True)


@pytest.mark.unit
class TestConfigManager:
    def test_missing_file_uses_defaults(self, config_file: Path) -> None:
        manager = ConfigManager(config_file)
        assert manager.get_config() == get_default_config()
        assert not config_file.exists()

    def test_create_if_missing(self, config_file: Path) -> None:
        config = ConfigManager(config_file).load_config(create_if_missing=True)
        assert config_file.exists()
        assert config == get_default_config()

    def test_default_path_follows_xdg(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path))
        assert ConfigManager().config_path == tmp_path / "sympidx" / "config.yaml"

    def test_file_values(self, config_file: Path) -> None:
        config_file.parent.mkdir(parents=True)
        config_file.write_text(yaml.safe_dump({"numerics": {"grid": 2048}, "suite": {"trials": 3}}))
        config = ConfigManager(config_file).get_config()
        assert config.numerics.grid == 2048
        assert config.suite.trials == 3
        assert config.suite.seed == 0xC0FFEE

    def test_env_overrides_file(self, config_file: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        config_file.parent.mkdir(parents=True)
        config_file.write_text(yaml.safe_dump({"suite": {"seed": 1}}))
        monkeypatch.setenv("SYMPIDX_SUITE__SEED", "0x1234")
        monkeypatch.setenv("SYMPIDX_OUTPUT__SHOW_CROSSINGS", "off")
        config = ConfigManager(config_file).get_config()
        assert config.suite.seed == 4660
        assert config.output.show_crossings is False

    def test_env_without_file(self, config_file: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("SYMPIDX_NUMERICS__TOL", "1e-8")
        assert ConfigManager(config_file).get_config().numerics.tol == 1e-8

    def test_invalid_yaml(self, config_file: Path) -> None:
        config_file.parent.mkdir(parents=True)
        config_file.write_text("numerics: [unclosed")
        with pytest.raises(ValueError, match="Invalid YAML"):
            ConfigManager(config_file).load_config()

    def test_invalid_value(self, config_file: Path) -> None:
        config_file.parent.mkdir(parents=True)
        config_file.write_text(yaml.safe_dump({"numerics": {"tol": -1.0}}))
        with pytest.raises(ValueError, match="Invalid configuration"):
            ConfigManager(config_file).load_config()

    def test_set_value_persists(self, config_file: Path) -> None:
        ConfigManager(config_file).set_value("suite.trials", 12)
        reloaded = ConfigManager(config_file)
        assert reloaded.get_value("suite.trials") == 12
        assert reloaded.get_value("suite.missing", "fallback") == "fallback"

    def test_set_value_rejects_unknown_keys(self, config_file: Path) -> None:
        manager = ConfigManager(config_file)
        with pytest.raises(KeyError):
            manager.set_value("numerics.resolution", 3)
        with pytest.raises(KeyError):
            manager.set_value("solver.tol", 3)
        assert not config_file.exists()

    def test_set_value_rejects_invalid_values(self, config_file: Path) -> None:
        with pytest.raises(ValueError):
            ConfigManager(config_file).set_value("suite.dims", [9])

    def test_validate_flags_vacuous_suites(self, config_file: Path) -> None:
        manager = ConfigManager(config_file)
        assert manager.validate_config() == []
        manager.set_value("suite.trials", 0)
        assert manager.validate_config() == ["suite.trials is 0: suites will pass vacuously"]

    def test_validate_reports_load_errors(self, config_file: Path) -> None:
        config_file.parent.mkdir(parents=True)
        config_file.write_text(yaml.safe_dump({"output": {"format": "html"}}))
        issues = ConfigManager(config_file).validate_config()
        assert len(issues) == 1
        assert issues[0].startswith("Invalid configuration")

    def test_reset_to_defaults(self, config_file: Path) -> None:
        manager = ConfigManager(config_file)
        manager.set_value("numerics.grid", 128)
        assert manager.reset_to_defaults().numerics.grid == 4096


@pytest.mark.unit
class TestEnvOverrides:
    def test_nested_keys_and_scalars(self) -> None:
        environ = {
            "SYMPIDX_SUITE__SEED": "0xC0FFEE",
            "SYMPIDX_SUITE__DIMS": "[1, 3]",
            "SYMPIDX_OUTPUT__CONSOLE_WIDTH": "",
            "SYMPIDX_LOG_LEVEL": "DEBUG",
            "HOME": "/root",
        }
        assert env_overrides(environ) == {
            "suite": {"seed": 0xC0FFEE, "dims": [1, 3]},
            "output": {"console_width": None},
            "log_level": "DEBUG",
        }

    def test_merge_keeps_untouched_keys(self) -> None:
        base = {"numerics": {"tol": 1e-9, "grid": 4096}, "log_level": "INFO"}
        merged = merge(base, {"numerics": {"grid": 64}})
        assert merged == {"numerics": {"tol": 1e-9, "grid": 64}, "log_level": "INFO"}
        assert base["numerics"]["grid"] == 4096
