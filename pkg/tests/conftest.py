"""Shared fixtures for the symplectic index tests."""

import json
import os
from pathlib import Path
from typing import Any, Callable

import numpy as np
import pytest

from symplectic_index.core.config import get_fast_config
from symplectic_index.core.symlin import SympSpace
from symplectic_index.models.config import Config


@pytest.fixture(autouse=True)
def clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep SYMPIDX_* variables from the developer's shell out of the tests."""
    for key in list(os.environ):
        if key.startswith("SYMPIDX_"):
            monkeypatch.delenv(key)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


@pytest.fixture
def plane() -> SympSpace:
    """(ℝ², ω₀)."""
    return SympSpace.standard(1)


@pytest.fixture
def fast_config() -> Config:
    return get_fast_config()


@pytest.fixture
def write_spec(tmp_path: Path) -> Callable[..., Path]:
    """Write a JSON input file and return its path."""

    def _write(name: str = "path.json", **data: Any) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path

    return _write
