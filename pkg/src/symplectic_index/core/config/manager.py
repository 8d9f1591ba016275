"""YAML configuration file with SYMPIDX_* environment overrides."""

import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

import yaml
from pydantic import ValidationError

from ...models.config import Config
from .defaults import get_default_config


logger = logging.getLogger(__name__)

ENV_PREFIX = "SYMPIDX_"
ENV_DELIMITER = "__"


def default_config_path() -> Path:
    """``$XDG_CONFIG_HOME/sympidx/config.yaml``, falling back to ``~/.config``."""
    base = os.environ.get("XDG_CONFIG_HOME")
    root = Path(base) if base else Path.home() / ".config"
    return root / "sympidx" / "config.yaml"


def env_overrides(environ: Mapping[str, str]) -> Dict[str, Any]:
    """
    Nested overrides from ``SYMPIDX_SECTION__KEY`` variables.

    Values are read as YAML scalars, so ``off`` is False, ``0x1234`` is an
    int and ``null`` is None; anything else stays a string for pydantic to
    coerce.
    """
    overrides: Dict[str, Any] = {}
    for name, raw in environ.items():
        if not name.startswith(ENV_PREFIX):
            continue
        *sections, key = name[len(ENV_PREFIX):].lower().split(ENV_DELIMITER)
        node = overrides
        for section in sections:
            node = node.setdefault(section, {})
        try:
            node[key] = yaml.safe_load(raw) if raw else None
        except yaml.YAMLError:
            node[key] = raw
    return overrides


def merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """Recursive merge; ``override`` wins on conflicts."""
    merged = dict(base)
    for key, value in override.items():
        current = merged.get(key)
        merged[key] = merge(current, value) if isinstance(current, dict) and isinstance(value, dict) else value
    return merged


class ConfigManager:
    """Loads, edits and saves the sympidx configuration file."""

    def __init__(self, config_path: Optional[Path] = None):
        """
        Args:
            config_path: Configuration file; the XDG location when None
        """
        self.config_path = Path(config_path) if config_path is not None else default_config_path()
        self._config: Optional[Config] = None

    def _read_file(self) -> Dict[str, Any]:
        try:
            data = yaml.safe_load(self.config_path.read_text(encoding="utf-8"))
        except yaml.YAMLError as e:
            logger.error(f"YAML parsing failed: {e}")
            raise ValueError(f"Invalid YAML in config file: {e}")
        except OSError as e:
            logger.error(f"Failed to read {self.config_path}: {e}")
            raise RuntimeError(f"Configuration loading error: {e}")
        if data is None:
            return {}
        if not isinstance(data, dict):
            raise ValueError(f"Invalid configuration: top level of {self.config_path} must be a mapping")
        return data

    @staticmethod
    def _build(data: Dict[str, Any]) -> Config:
        try:
            return Config(**data)
        except ValidationError as e:
            logger.error(f"Configuration validation failed: {e}")
            raise ValueError(f"Invalid configuration: {e}")

    def load_config(self, create_if_missing: bool = False) -> Config:
        """
        Read the file, apply environment overrides and validate.

        Args:
            create_if_missing: Write the defaults when the file is absent

        Raises:
            ValueError: malformed YAML or invalid values
            RuntimeError: the file cannot be read
        """
        if self.config_path.exists():
            logger.info(f"Loading config from: {self.config_path}")
            data = self._read_file()
        elif create_if_missing:
            logger.info(f"Config file not found, creating default: {self.config_path}")
            self.save_config(get_default_config())
            data = self._read_file()
        else:
            logger.info("Config file not found, using defaults")
            data = {}
        self._config = self._build(merge(data, env_overrides(os.environ)))
        return self._config

    def save_config(self, config: Config) -> None:
        """Write ``config`` as YAML, creating parent directories."""
        text = yaml.safe_dump(
            config.model_dump(exclude_none=True),
            default_flow_style=False,
            sort_keys=False,
            allow_unicode=True,
        )
        try:
            self.config_path.parent.mkdir(parents=True, exist_ok=True)
            self.config_path.write_text(text, encoding="utf-8")
        except OSError as e:
            logger.error(f"Failed to save config: {e}")
            raise RuntimeError(f"Configuration saving error: {e}")
        logger.info(f"Configuration saved to: {self.config_path}")
        self._config = config

    def get_config(self) -> Config:
        """The loaded configuration, loading on first use."""
        if self._config is None:
            self._config = self.load_config()
        return self._config

    def get_value(self, key_path: str, default: Any = None) -> Any:
        """Value at a dot path such as ``suite.seed``, or ``default``."""
        node: Any = self.get_config().model_dump()
        for key in key_path.split("."):
            if not isinstance(node, dict) or key not in node:
                return default
            node = node[key]
        return node

    def set_value(self, key_path: str, value: Any) -> Config:
        """
        Set a dot-path key, validate, and save.

        Raises:
            KeyError: the section or key does not exist
            ValueError: the new value fails validation
        """
        data = self.get_config().model_dump()
        *sections, key = key_path.split(".")
        node = data
        for section in sections:
            if not isinstance(node.get(section), dict):
                raise KeyError(f"Unknown configuration section: {section}")
            node = node[section]
        if key not in node:
            raise KeyError(f"Unknown configuration key: {key_path}")
        node[key] = value

        try:
            updated = Config(**data)
        except ValidationError as e:
            raise ValueError(f"Invalid value for {key_path}: {e}")
        self.save_config(updated)
        return updated

    def validate_config(self) -> List[str]:
        """Load errors, or warnings about a valid but suspicious configuration."""
        try:
            config = self.get_config()
        except (ValueError, RuntimeError) as e:
            return [str(e)]

        issues = []
        if config.numerics.perturbation_eps <= config.numerics.nondegeneracy_margin:
            issues.append("perturbation_eps should exceed nondegeneracy_margin")
        if config.suite.trials == 0:
            issues.append("suite.trials is 0: suites will pass vacuously")
        return issues

    def reset_to_defaults(self) -> Config:
        """Overwrite the file with the defaults and reload it."""
        self.save_config(get_default_config())
        return self.load_config()
