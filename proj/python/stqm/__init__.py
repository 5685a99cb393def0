"""Python access to the stqm beam-splitter simulator.

Config, report and verify documents travel as JSON; the helpers here turn
them into dicts.
"""

import json

from ._stqm import (
    ConfigError,
    GaussianSpec,
    GeometryError,
    Grid2D,
    IoError,
    __version__,
    gaussian_packet,
    inner_product,
    oracle_field,
    oracle_sigma,
    propagate,
    rotate_quarter_turns,
)
from . import _stqm


def _doc(config):
    return config if isinstance(config, str) else json.dumps(config)


def validate_config(config):
    return _stqm.validate_config(_doc(config))


def effective_config(config):
    return json.loads(_stqm.effective_config(_doc(config)))


def run_experiment(config):
    return json.loads(_stqm.run_experiment(_doc(config)))


def run_to_directory(config, out_dir, stride=1):
    _stqm.run_to_directory(_doc(config), str(out_dir), stride)


def verify(config):
    return json.loads(_stqm.verify(_doc(config)))


def oracle_predictions(config):
    return json.loads(_stqm.oracle_predictions(_doc(config)))
