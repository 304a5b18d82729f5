"""Pytest configuration and fixtures"""
import logging
import pytest
import tempfile
import shutil
from pathlib import Path
from typing import Generator

from click.testing import CliRunner


@pytest.fixture
def temp_config_dir() -> Generator[Path, None, None]:
    """Create a temporary configuration directory for tests"""
    temp_dir = Path(tempfile.mkdtemp())
    yield temp_dir
    shutil.rmtree(temp_dir)


@pytest.fixture
def mock_config(temp_config_dir: Path, monkeypatch):
    """Configuration with defaults only, isolated from ~/.crslab and the environment"""
    for name in ('CRSLAB_ENUMERATION_CAP', 'CRSLAB_GROUP_ORDER_CAP', 'CRSLAB_LOG_LEVEL'):
        monkeypatch.delenv(name, raising=False)

    from crslab.config.settings import ConfigManager

    config = ConfigManager(str(temp_config_dir))
    monkeypatch.setattr('crslab.config.settings.config', config)
    return config


@pytest.fixture
def rng():
    """Deterministic generator on stream 0 of seed 0"""
    from crslab.utils.rng import make_rng

    return make_rng(0)


@pytest.fixture
def runner(mock_config) -> Generator[CliRunner, None, None]:
    """Click runner over an isolated configuration

    Every invocation reconfigures the root logger, so its handlers and
    level are put back afterwards.
    """
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield CliRunner()
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def invoke(runner):
    """Invoke the root command group with the given arguments"""
    from crslab.app import main

    def _invoke(*args: str):
        return runner.invoke(main, list(args))

    return _invoke
