import os
from pathlib import Path
from typing import Tuple
from unittest import mock

import pytest
import yaml

import leafdist.config
from leafdist.config import Config
from leafdist.exact import counts

# constants that indicate which config to load
# see function get_path_for_config
LOAD_SAMPLE_CONFIG = -1
LOAD_TEST_CONFIG = -2


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    slow = pytest.mark.skip(reason="need --slow option to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(slow)


# use for typing only
def config_loader(config_key: int = LOAD_TEST_CONFIG) -> Tuple[Path, str]:
    ...


@pytest.fixture(autouse=True)
def fresh_state():
    Config.set_instance(None)
    counts.distribution.cache_clear()
    yield
    Config.set_instance(None)
    counts.distribution.cache_clear()


@pytest.fixture()
def load_config(mocker: mock, tmp_path: Path) -> config_loader:
    """
    Loads the sample or the test config into a temporary directory and sets this directory as leafdist config
    directory. It will delete all other configs found in that directory.

    :param config_key: `LOAD_SAMPLE_CONFIG` or `LOAD_TEST_CONFIG`
    :return: Tuple[Path, str] with the path of the config file and its content
    """
    mocker.patch("leafdist.config._config_dir", return_value=tmp_path)
    mocker.patch("leafdist.cli.environment.LEAFDIST_CONF_PATH", None)

    def loader(config_key: int = LOAD_TEST_CONFIG) -> Tuple[Path, str]:
        for file in tmp_path.glob("*"):
            if file.is_file():
                os.remove(str(file.resolve()))
        data = get_path_for_config(config_key).read_text()
        config_file = tmp_path / "leafdist_config.yaml"
        config_file.write_text(data)
        return config_file, data

    return loader


def get_path_for_config(config_key: int) -> Path:
    if config_key == LOAD_SAMPLE_CONFIG:
        return leafdist.config.sample_config_path()
    return Path(__file__).parent / "test_configs" / "test_config.yaml"


@pytest.fixture()
def test_config(load_config: config_loader) -> Config:
    load_config(LOAD_TEST_CONFIG)
    return Config.get_instance()


@pytest.fixture()
def sample_config_data() -> dict:
    return yaml.safe_load(get_path_for_config(LOAD_SAMPLE_CONFIG).read_text())
