from fractions import Fraction as F

import hypothesis.strategies as s
import pytest
from hypothesis import given

from src.tetragap.base import Point2, incenter2
from src.tetragap.certificate import edge_weighted_v, expanded_v, u_pair, v_pair
from src.tetragap.construct import apex, build_tetrahedron
from src.tetragap.errors import DegeneracyError, PreconditionError
from src.tetragap.fuzzer import random_acute_config, random_heronian_config
from src.tetragap.metrics import metrics
from src.tetragap.scalar import QuadExt, sign
from src.tetragap.special import (REGIME_ABOVE, REGIME_BELOW, REGIME_REGULAR,
                                  equilateral_gap, g_pair, pech_euler, pech_polynomial,
                                  pech_sos, pech_symbolic_identity, planar_apex,
                                  planar_apex_height, planar_critical,
                                  planar_tangent_determinant, regular_g_vanish,
                                  special_case_a, special_case_b, squared_side_product)


class TestCircumcenter:
    def test_g_pair(self, circumcentric):
        assert g_pair(circumcentric) == (-24, 0)
        assert squared_side_product(circumcentric) == 2880

    def test_closed_form(self, circumcentric):
        assert special_case_a(circumcentric) == F(5, 24)

    def test_rejects_other_tangent_points(self, circumcentric):
        moved = circumcentric.__class__(circumcentric.x, circumcentric.y, circumcentric.z,
                                        Point2(F(2), F(3, 2)), circumcentric.r)
        with pytest.raises(PreconditionError, match="circumcenter"):
            special_case_a(moved)

    def test_equilateral_base_has_zero_gap(self, example2):
        assert g_pair(example2) == (0, 0)
        assert u_pair(example2) == (0, 0)
        assert special_case_a(example2) == 0

    def test_random_acute_bases(self, rng):
        for _ in range(10):
            cfg = random_acute_config(rng, 20, 4)
            assert u_pair(cfg) == (0, 0)
            assert special_case_a(cfg) > 0

    @pytest.mark.slow
    def test_random_acute_sweep(self, rng):
        for _ in range(100):
            special_case_a(random_acute_config(rng))


class TestIncenter:
    def test_closed_form(self, incentric_345):
        assert special_case_b(incentric_345) == F(1, 12)

    def test_example1_base(self, example1):
        cfg = example1.__class__(example1.x, example1.y, example1.z,
                                 incenter2(example1.x, example1.y, example1.z), example1.r)
        assert cfg.c == Point2(F(66), F(44))
        assert special_case_b(cfg) > 0

    def test_equilateral_base(self, example2):
        assert special_case_b(example2) == 0

    def test_v_vanishes(self, incentric_345):
        assert expanded_v(incentric_345) == (0, 0)
        assert edge_weighted_v(incentric_345) == (0, 0)
        assert v_pair(incentric_345)[:2] == (0, 0)

    def test_recovered_v_vanishes_on_random_bases(self, rng):
        for _ in range(5):
            cfg = random_heronian_config(rng)
            v1, v2, dis = v_pair(cfg)
            assert (v1, v2, dis) == (0, 0, 0)

    def test_rejects_other_tangent_points(self, example1):
        with pytest.raises(PreconditionError, match="incenter"):
            special_case_b(example1)

    def test_random_heronian_bases(self, rng):
        for _ in range(10):
            assert special_case_b(random_heronian_config(rng)) > 0

    @pytest.mark.slow
    def test_random_heronian_sweep(self, rng):
        for _ in range(100):
            special_case_b(random_heronian_config(rng))


def test_g_vanishes_on_regular_triangles():
    assert regular_g_vanish()


def test_g_as_printed_does_not_vanish_on_regular_triangles():
    assert not regular_g_vanish(printed=True)


class TestPech:
    def test_symbolic_identity(self):
        assert pech_symbolic_identity()

    @given(s.integers(1, 200), s.integers(1, 200), s.integers(1, 200))
    def test_polynomial_is_weighted_sum_of_squares(self, a, b, c):
        assert pech_polynomial(a, b, c) == pech_sos(F(a), F(b), F(c))

    def test_heronian_example(self):
        pech = pech_euler(154, 165, 143)
        assert pech.heronian
        assert (pech.K, pech.r, pech.R) == (10164, 44, F(715, 8))
        assert pech.d2 == F(7865, 64)
        assert pech.euler_ok and pech.R_ge_2r and not pech.equality
        assert pech.ok

    @pytest.mark.parametrize("sides,P,d2", [
        ((3, 4, 5), 12, F(5, 4)),
        ((13, 14, 15), None, None),
        ((5, 5, 6), None, F(25, 64)),
    ])
    def test_small_heronian(self, sides, P, d2):
        pech = pech_euler(*sides)
        assert pech.heronian
        assert pech.euler_ok
        if P is not None:
            assert pech.P == P
        if d2 is not None:
            assert pech.d2 == d2

    def test_equilateral_is_the_equality_case(self):
        pech = pech_euler(2, 2, 2)
        assert not pech.heronian
        assert pech.P == 0
        assert pech.equality
        assert pech.d2 == 0
        assert pech.R == 2 * pech.r

    def test_large_non_heronian_sides(self):
        pech = pech_euler(999999937, 999999938, 999999939)
        assert not pech.heronian
        assert pech.identity_ok and pech.euler_ok and pech.R_ge_2r

    def test_non_heronian_in_extension(self):
        pech = pech_euler(2, 3, 4)
        assert isinstance(pech.K, QuadExt)
        assert pech.euler_ok

    def test_polynomial_only(self):
        pech = pech_euler(7, 8, 9, numeric=False)
        assert pech.identity_ok
        assert pech.K is None

    @pytest.mark.parametrize("sides", [(1, 2, 3), (0, 1, 1), (1, 1, 5)])
    def test_degenerate_triangles_raise(self, sides):
        with pytest.raises(PreconditionError):
            pech_euler(*sides)


class TestEquilateral:
    def test_example2_values(self, example2):
        eq = equilateral_gap(F(4), F(1, 2))
        assert (eq.w3, eq.R, eq.d2) == (4, F(13, 6), F(16, 9))
        assert eq.G == 0 and eq.squared_gap == 0
        assert eq.regime == REGIME_ABOVE

        m = metrics(build_tetrahedron(example2))
        assert m.R2 == eq.R ** 2
        assert m.d2 == eq.d2
        assert apex(example2).x3 == eq.w3

    def test_regular(self):
        eq = equilateral_gap(F(24), F(1))
        assert (eq.w3, eq.R, eq.d2) == (4, 3, 0)
        assert eq.regime == REGIME_REGULAR

    def test_below_regular(self):
        eq = equilateral_gap(F(4), F(1, 3))
        assert (eq.w3, eq.R, eq.d2) == (1, F(7, 6), F(1, 4))
        assert eq.regime == REGIME_BELOW

    def test_above_regular(self):
        eq = equilateral_gap(F(4), F(11, 20))
        assert eq.w3 == F(440, 37)
        assert eq.G == 0
        assert eq.regime == REGIME_ABOVE

    def test_sweep(self):
        for k in range(1, 100):
            r = F(k, 100)
            if 12 * r * r >= 4:
                break
            eq = equilateral_gap(F(4), r)
            assert eq.G == 0 and eq.rel1 and eq.rel2

    def test_random_in_range(self, rng):
        checked = 0
        while checked < 100:
            l2 = F(rng.randint(1, 60), rng.randint(1, 7))
            r = F(rng.randint(1, 60), rng.randint(1, 30))
            if 12 * r * r >= l2:
                continue
            checked += 1
            eq = equilateral_gap(l2, r)
            assert eq.rel1 and eq.rel2
            assert eq.squared_gap == 0 and eq.linear_side_sign >= 0
            expected = {-1: REGIME_BELOW, 0: REGIME_REGULAR, 1: REGIME_ABOVE}[sign(24 * r * r - l2)]
            assert eq.regime == expected

    @pytest.mark.parametrize("s", [F(1, 7), F(1), F(5, 3)])
    def test_regular_case(self, s):
        eq = equilateral_gap(24 * s * s, s)
        assert eq.d2 == 0
        assert eq.w3 == eq.R + eq.r

    @pytest.mark.parametrize("r", [F(3, 5), QuadExt(F(0), F(1, 3), 3)])
    def test_critical_and_beyond_raise(self, r):
        with pytest.raises(DegeneracyError):
            equilateral_gap(F(4), r)

    @pytest.mark.parametrize("l2,r", [(F(0), F(1)), (F(4), F(-1, 2)), (F(4), F(0))])
    def test_domain_errors(self, l2, r):
        with pytest.raises(PreconditionError):
            equilateral_gap(l2, r)


class TestPlanar:
    def test_critical_radius(self):
        assert planar_critical(F(2, 5)) == F(6, 25)
        assert planar_critical(F(1, 2)) == F(1, 4)

    def test_apex(self):
        assert planar_apex(F(2, 5), F(1, 5)) == Point2(F(9, 25), F(12, 25))
        assert planar_apex_height(F(2, 5), F(1, 5)) == F(12, 25)

    def test_random_touching_points(self, rng):
        for _ in range(100):
            p = F(rng.randint(1, 999), 1000)
            critical = planar_critical(p)
            assert critical == p * (1 - p)
            r = critical * F(rng.randint(1, 99), 100)
            assert planar_apex_height(p, r) > 0

    def test_large_prime_denominator(self):
        p = F(1, 1000000000039)
        assert planar_critical(p) == p * (1 - p)

    def test_tangent_determinant(self):
        assert planar_tangent_determinant(F(2, 5), F(6, 25)) == 0
        # r^2 - p(1 - p) for 0 < p < 1
        assert planar_tangent_determinant(F(2, 5), F(1, 25)) == F(1, 25) - F(6, 25)

    def test_apex_at_critical_radius_raises(self):
        with pytest.raises(DegeneracyError, match="parallel"):
            planar_apex(F(1, 2), F(1, 2))

    @pytest.mark.parametrize("p", [F(0), F(1), F(3, 2), F(-1, 4), QuadExt(F(0), F(1, 2), 2)])
    def test_touching_point_out_of_range(self, p):
        with pytest.raises(PreconditionError):
            planar_critical(p)
