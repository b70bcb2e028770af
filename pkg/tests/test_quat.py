"""
Exact quaternion arithmetic over a + b·√2.
"""
import math
import random
from fractions import Fraction

import pytest

from algebra.quat import (
    GENERATORS,
    IDENTITY,
    ONE,
    SQRT2_HALF,
    ExactQuaternion,
    ExactScalar,
    axis_angle,
    q_conj,
    q_mul,
    q_neg,
    q_norm2,
    to_float,
)
from hyperfoam.exceptions import ExactnessError

I = ExactQuaternion.of(0, 1, 0, 0)
J = ExactQuaternion.of(0, 0, 1, 0)
K = ExactQuaternion.of(0, 0, 0, 1)


def _random_scalar(rng):
    return ExactScalar(Fraction(rng.randint(-9, 9), rng.randint(1, 6)), Fraction(rng.randint(-9, 9), rng.randint(1, 6)))


def _random_quaternion(rng):
    return ExactQuaternion(*(_random_scalar(rng) for _ in range(4)))


class TestExactScalar:
    def test_parts_are_reduced_fractions(self):
        s = ExactScalar(Fraction(2, 4), Fraction(-3, -6))
        assert s.rat == Fraction(1, 2)
        assert s.rad.denominator == 2

    def test_sqrt2_squared_is_two(self):
        assert ExactScalar(0, 1) * ExactScalar(0, 1) == 2

    def test_half_sqrt2_squared_is_half(self):
        assert SQRT2_HALF * SQRT2_HALF == ExactScalar(Fraction(1, 2))

    def test_ring_laws_on_random_values(self):
        rng = random.Random(7)
        for _ in range(200):
            a, b, c = (_random_scalar(rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a

    @pytest.mark.parametrize("value, expected", [
        (ExactScalar(1, 0), 1),
        (ExactScalar(0, 0), 0),
        (ExactScalar(-1, 0), -1),
        (ExactScalar(-1, 1), 1),     # √2 - 1 > 0
        (ExactScalar(2, -1), 1),     # 2 - √2 > 0
        (ExactScalar(1, -1), -1),    # 1 - √2 < 0
        (ExactScalar(-2, 1), -1),    # √2 - 2 < 0
    ])
    def test_sign_is_exact(self, value, expected):
        assert value.sign() == expected

    @pytest.mark.parametrize("value, text", [
        (ExactScalar(Fraction(1, 2)), "1/2"),
        (ExactScalar(0, Fraction(1, 2)), "1/2·√2"),
        (ExactScalar(0, Fraction(-1, 2)), "-1/2·√2"),
        (ExactScalar(1, -1), "1-1·√2"),
        (ExactScalar(0), "0"),
    ])
    def test_string_rendering(self, value, text):
        assert str(value) == text

    def test_non_integer_cannot_become_integer(self):
        with pytest.raises(ExactnessError):
            SQRT2_HALF.as_integer()


class TestHamiltonProduct:
    def test_i_times_j_is_k(self):
        assert q_mul(I, J) == K

    def test_j_times_i_is_minus_k(self):
        assert q_mul(J, I) == q_neg(K)

    def test_r120_cubed_is_identity(self):
        r = GENERATORS.R120
        assert q_mul(q_mul(r, r), r) == IDENTITY

    def test_r60_has_order_six(self):
        assert GENERATORS.R60**6 == IDENTITY
        assert GENERATORS.R60**3 == q_neg(IDENTITY)

    def test_eighth_turn_squared_is_i(self):
        assert q_mul(GENERATORS.E8TH, GENERATORS.E8TH) == I

    def test_product_is_associative_and_norm_multiplicative(self):
        rng = random.Random(11)
        for _ in range(50):
            a, b, c = (_random_quaternion(rng) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert q_norm2(a * b) == q_norm2(a) * q_norm2(b)


class TestConjugateAndNorm:
    def test_conjugate_of_i(self):
        assert q_conj(I) == q_neg(I)

    def test_norm_of_eighth_turn(self):
        assert q_norm2(GENERATORS.E8TH) == ONE

    def test_norm_of_all_ones(self):
        assert q_norm2(ExactQuaternion.of(1, 1, 1, 1)) == 4

    def test_times_conjugate_is_norm(self):
        a = ExactQuaternion(ExactScalar(1, 2), ExactScalar(0, 1), ExactScalar(Fraction(1, 3)), ExactScalar(-1))
        product = q_mul(a, q_conj(a))
        assert product.w == q_norm2(a)
        assert not product.x and not product.y and not product.z

    def test_to_float_is_lossy_copy(self):
        assert to_float(GENERATORS.E8TH) == pytest.approx((math.sqrt(2) / 2, math.sqrt(2) / 2, 0.0, 0.0))


class TestGenerators:
    @pytest.mark.parametrize("name", GENERATORS._fields)
    def test_every_generator_is_unit(self, name):
        assert getattr(GENERATORS, name).is_unit

    def test_exact_components(self):
        half = Fraction(1, 2)
        assert GENERATORS.R120 == ExactQuaternion.of(-half, half, half, half)
        assert GENERATORS.R60 == ExactQuaternion.of(half, half, half, half)
        assert GENERATORS.QI == I
        assert GENERATORS.QJ == J
        assert GENERATORS.E8TH.w == SQRT2_HALF and GENERATORS.E8TH.x == SQRT2_HALF


class TestAxisAngle:
    def test_identity_has_zero_turn_and_no_axis(self):
        split = axis_angle(IDENTITY)
        assert split.omega == 0
        assert split.axis is None

    def test_minus_one_is_half_turn(self):
        assert axis_angle(q_neg(IDENTITY)).omega == Fraction(1, 2)

    def test_j_is_quarter_turn_about_j(self):
        split = axis_angle(J)
        assert split.omega == Fraction(1, 4)
        assert split.tag == "j"

    def test_r60_is_sixth_turn_about_u(self):
        split = axis_angle(GENERATORS.R60)
        assert split.omega == Fraction(1, 6)
        assert split.tag == "u"
        s = 1 / math.sqrt(3)
        assert split.axis == pytest.approx((s, s, s))

    def test_eighth_turn(self):
        split = axis_angle(GENERATORS.E8TH)
        assert split.omega == Fraction(1, 8)
        assert split.tag == "i"

    @pytest.mark.parametrize("name", GENERATORS._fields)
    def test_recomposition_matches(self, name):
        q = getattr(GENERATORS, name)
        assert axis_angle(q).recompose() == pytest.approx(to_float(q), abs=1e-12)

    def test_non_unit_rejected(self):
        with pytest.raises(ExactnessError):
            axis_angle(ExactQuaternion.of(1, 1, 1, 1))
