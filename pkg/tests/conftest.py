import random
from fractions import Fraction as F
from pathlib import Path

import pytest

from src.tetragap.base import BaseConfig, Point2
from src.tetragap.fixtures import example1_config, example2_config, example3_config

CONFIG_DIR = Path(__file__).parent.parent / "configs"


def _config(x, y, z, c, r) -> BaseConfig:
    def point(p):
        return Point2(F(p[0]), F(p[1]))
    return BaseConfig(point(x), point(y), point(z), point(c), F(r))


@pytest.fixture
def make_config():
    """Rational config from plain coordinate pairs."""
    return _config


@pytest.fixture
def example1():
    return example1_config()


@pytest.fixture
def example2():
    return example2_config()


@pytest.fixture
def example3():
    return example3_config(F(1, 3))


@pytest.fixture
def incentric_345():
    """3-4-5 right triangle touched at its incenter (1, 1)."""
    return _config((0, 0), (4, 0), (0, 3), (1, 1), F(1, 2))


@pytest.fixture
def circumcentric():
    """Acute base (0,0), (4,0), (1,3) touched at its circumcenter (2, 1)."""
    return _config((0, 0), (4, 0), (1, 3), (2, 1), F(1, 5))


@pytest.fixture
def rng():
    return random.Random(42)


@pytest.fixture
def config_dir():
    return CONFIG_DIR
