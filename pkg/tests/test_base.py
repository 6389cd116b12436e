from fractions import Fraction as F

import pytest

from src.tetragap.base import (Point2, area_set, barycentric_weights, big_A_B,
                               circumcenter2, critical_inradius_sq, from_barycentric,
                               incenter2, side_lengths, twice_area, validate)
from src.tetragap.errors import DegeneracyError, PreconditionError
from src.tetragap.fixtures import example3_config
from src.tetragap.fuzzer import random_config
from src.tetragap.scalar import QuadExt


def test_twice_area_orientation():
    x, y, z = Point2(F(0), F(0)), Point2(F(1), F(0)), Point2(F(0), F(1))
    assert twice_area(x, y, z) == 1
    assert twice_area(x, z, y) == -1
    assert twice_area(x, y, Point2(F(2), F(0))) == 0


def test_example1_areas(example1):
    areas = area_set(example1)
    assert (areas.a0, areas.ax, areas.ay, areas.az) == (20328, 3696, 9240, 7392)
    assert areas.ax + areas.ay + areas.az == areas.a0
    assert big_A_B(example1) == (F(252444487680), F(158802336))


def test_example2_areas(example2):
    areas = area_set(example2)
    third = QuadExt(F(0), F(2, 3), 3)
    assert areas.ax == areas.ay == areas.az == third
    A, B = big_A_B(example2)
    assert A == QuadExt(F(0), F(8, 9), 3)
    assert B == QuadExt(F(0), F(8, 3), 3)


def test_example3_critical_ratio():
    assert critical_inradius_sq(example3_config()) == F(1, 2)


def test_B_is_power_of_tangent_point(example1):
    """B = a0 (rho^2 - |o - c|^2), rho the base circumradius."""
    o = circumcenter2(example1.x, example1.y, example1.z)
    assert o == Point2(F(77), F(363, 8))
    rho2 = (o - example1.x).norm2()
    _, B = big_A_B(example1)
    assert B == area_set(example1).a0 * (rho2 - (o - example1.c).norm2())


def test_B_translation_invariant(rng):
    for _ in range(200):
        cfg = random_config(rng, 20, 5)
        for _ in range(5):
            h = Point2(F(rng.randint(-30, 30), rng.randint(1, 5)),
                       F(rng.randint(-30, 30), rng.randint(1, 5)))
            moved = cfg.translated(h)
            assert big_A_B(moved) == big_A_B(cfg)
            assert area_set(moved) == area_set(cfg)


def test_incenter(example1, incentric_345):
    assert side_lengths(example1.x, example1.y, example1.z) == (165, 143, 154)
    assert incenter2(example1.x, example1.y, example1.z) == Point2(F(66), F(44))
    assert incenter2(incentric_345.x, incentric_345.y, incentric_345.z) == incentric_345.c


def test_side_lengths_outside_field_raises():
    x, y, z = Point2(F(0), F(0)), Point2(F(1), F(0)), Point2(F(0), F(1))
    with pytest.raises(PreconditionError, match="not representable"):
        side_lengths(x, y, z)


def test_barycentric_roundtrip(example1):
    weights = barycentric_weights(example1)
    assert sum(weights) == 1
    assert from_barycentric(example1, weights) == example1.c


def test_validate_collinear(make_config):
    with pytest.raises(PreconditionError, match="collinear"):
        validate(make_config((0, 0), (1, 1), (2, 2), (1, 1), 1))


def test_validate_clockwise(make_config):
    with pytest.raises(PreconditionError, match="clockwise"):
        validate(make_config((0, 0), (0, 3), (4, 0), (1, 1), F(1, 2)))


def test_validate_exterior_tangent_point(make_config):
    with pytest.raises(PreconditionError, match="a_x <= 0"):
        validate(make_config((0, 0), (4, 0), (0, 3), (5, 5), F(1, 2)))


def test_validate_tangent_point_on_edge(make_config):
    with pytest.raises(PreconditionError, match="a_z <= 0"):
        validate(make_config((0, 0), (4, 0), (0, 3), (2, 0), F(1, 2)))


def test_validate_radius(incentric_345):
    with pytest.raises(PreconditionError, match="r <= 0"):
        validate(incentric_345.with_radius(F(0)))
    with pytest.raises(DegeneracyError, match="prism"):
        validate(incentric_345.with_radius(F(1)))
    with pytest.raises(DegeneracyError, match="supercritical"):
        validate(incentric_345.with_radius(F(2)))
