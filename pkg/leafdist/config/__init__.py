import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List

import click
import yaml

import leafdist.validation
from leafdist.cli import environment
from leafdist.errors import ConfigTooNew, ConfigTooOld
from leafdist.helpers import SingletonMeta, parse_ratio

CURRENT_VERSION = 1
log = logging.getLogger(__name__)


def config_dir() -> Path:
    return _config_dir()


def config_path() -> Path:
    return _config_path()


# create functions we can mock during tests
def _config_path() -> Path:
    if environment.LEAFDIST_CONF_PATH:
        return Path(environment.LEAFDIST_CONF_PATH)
    return config_dir() / "leafdist_config.yaml"


def _config_dir() -> Path:
    return Path(click.get_app_dir("leafdist", force_posix=True))


def sample_config_path() -> Path:
    return Path(__file__).parent / "sample_config.yaml"


def check_config_version(data: Dict[str, Any]) -> None:
    version = data.get("version", 0)
    if version < CURRENT_VERSION:
        raise ConfigTooOld(version, CURRENT_VERSION)
    elif version > CURRENT_VERSION:
        raise ConfigTooNew(version, CURRENT_VERSION)


class Config(metaclass=SingletonMeta):
    def __init__(self):
        path = config_path()
        if not path.exists():
            log.debug(f"No config at {path}, using the packaged sample config.")
            path = sample_config_path()
        self.path = path
        self._cfg = yaml.safe_load(path.read_text())
        check_config_version(self._cfg)
        leafdist.validation.validate_leafdist_config(self._cfg)

    @property
    def max_leaves(self) -> int:
        return self._cfg["enumeration"]["max_leaves"]

    @property
    def workers(self) -> int:
        return self._cfg["enumeration"]["workers"]

    @property
    def exact_max_n(self) -> int:
        return self._cfg["quantiles"]["exact_max_n"]

    @property
    def log_margin(self) -> float:
        return float(self._cfg["quantiles"]["log_margin"])

    @property
    def seed(self) -> int:
        return self._cfg["sampling"]["seed"]

    @property
    def samples(self) -> int:
        return self._cfg["sampling"]["samples"]

    @property
    def batch_size(self) -> int:
        return self._cfg["sampling"]["batch_size"]

    @property
    def verify_defaults(self) -> Dict[str, int]:
        return dict(self._cfg["verify"])

    @property
    def output_format(self) -> str:
        return self._cfg["output"]["format"].lower()

    @property
    def asympt_percentiles(self) -> List[Fraction]:
        percentiles = self._cfg.get("asympt", {}).get("percentiles", ["1/2"])
        return [parse_ratio(p) for p in percentiles]

    def as_dict(self) -> Dict[str, Any]:
        return dict(self._cfg)
