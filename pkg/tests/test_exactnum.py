import random
from fractions import Fraction

import pytest

from qutritbell.exactnum import (
    ExactComplex,
    ExactScalar,
    INV_SQRT2,
    ONE,
    SQRT2,
    SQRT3,
    SQRT6,
    TWO_SQRT2,
    ZERO,
)


def rand_scalar(rng, span=9):
    return ExactScalar(
        *(Fraction(rng.randint(-span, span), rng.randint(1, span)) for _ in range(4))
    )


class TestFieldArithmetic:
    def test_radical_products(self):
        assert SQRT2 * SQRT3 == SQRT6
        assert SQRT2 * SQRT6 == ExactScalar(0, 0, 2)       # 2*sqrt3
        assert SQRT3 * SQRT6 == ExactScalar(0, 3)          # 3*sqrt2
        assert SQRT6 * SQRT6 == ExactScalar(6)

    def test_inv_sqrt2_squared_is_one_half(self):
        # 1/sqrt2 is stored rationalized as sqrt2/2 = (0, 1/2, 0, 0)
        assert INV_SQRT2 == ExactScalar(0, Fraction(1, 2))
        assert INV_SQRT2 * INV_SQRT2 == ExactScalar(Fraction(1, 2))

    def test_difference_of_squares(self):
        assert (ONE + SQRT2) * (ONE - SQRT2) == ExactScalar(-1)

    def test_scalar_int_fraction_mixing(self):
        assert SQRT2 * 2 == TWO_SQRT2
        assert 2 * SQRT2 == TWO_SQRT2
        assert SQRT2 + 0 == SQRT2
        assert SQRT2 / 2 == INV_SQRT2
        assert ONE - Fraction(1, 2) == ExactScalar(Fraction(1, 2))


class TestInvert:
    def test_invert_sqrt2(self):
        assert SQRT2.invert() == ExactScalar(0, Fraction(1, 2))

    def test_invert_two_sqrt2(self):
        assert TWO_SQRT2.invert() == ExactScalar(0, Fraction(1, 4))

    def test_invert_generic_multiply_back(self):
        x = ONE + SQRT2 + SQRT3
        assert x * x.invert() == ONE

    def test_invert_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            ZERO.invert()

    def test_invert_random_multiply_back(self):
        rng = random.Random(11)
        for _ in range(200):
            x = rand_scalar(rng)
            if not x:
                continue
            assert x * x.invert() == ONE


class TestFloatConversion:
    def test_two_sqrt2(self):
        assert abs(TWO_SQRT2.to_float() - 2.8284271247461903) < 1e-15

    def test_inv_sqrt3(self):
        inv_sqrt3 = ExactScalar(0, 0, Fraction(1, 3))
        assert abs(inv_sqrt3.to_float() - 0.5773502691896258) < 1e-15

    def test_zero(self):
        assert ZERO.to_float() == 0.0

    def test_float_consistency_with_products(self):
        rng = random.Random(5)
        for _ in range(100):
            x, y = rand_scalar(rng, 5), rand_scalar(rng, 5)
            lhs = (x * y).to_float()
            rhs = x.to_float() * y.to_float()
            assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs), abs(rhs))


class TestFieldAxioms:
    def test_randomized_axioms(self):
        rng = random.Random(202)
        for _ in range(1000):
            x, y, z = (rand_scalar(rng, 6) for _ in range(3))
            assert (x + y) + z == x + (y + z)
            assert x * y == y * x
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert (x - y) + y == x
            if x:
                assert x * x.invert() == ONE

    def test_linear_independence(self):
        # a + b*sqrt2 + c*sqrt3 + d*sqrt6 = 0 iff all coordinates vanish
        rng = random.Random(303)
        for _ in range(300):
            comps = [Fraction(0)] * 4
            idx = rng.randrange(4)
            comps[idx] = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            assert ExactScalar(*comps)
        assert not ExactScalar(0, 0, 0, 0)

    def test_canonical_form_idempotent(self):
        x = ExactScalar(Fraction(2, 4), Fraction(-6, 9))
        assert x.a == Fraction(1, 2) and x.b == Fraction(-2, 3)
        y = x + x - x
        for comp in y.components:
            assert comp.denominator > 0
            from math import gcd

            assert gcd(abs(comp.numerator), comp.denominator) == 1


class TestOrdering:
    def test_sign_of_radical_combination(self):
        assert (SQRT2 + SQRT3 - SQRT6).sign() == 1
        assert (SQRT6 - SQRT2 - SQRT3).sign() == -1
        assert ZERO.sign() == 0

    def test_pell_convergents_bracket_sqrt2(self):
        assert ExactScalar(Fraction(239, 169)) < SQRT2
        assert ExactScalar(Fraction(577, 408)) > SQRT2
        # within ~1.6e-12 of sqrt2; forces the interval refinement loop
        assert ExactScalar(Fraction(665857, 470832)) > SQRT2

    def test_abs(self):
        assert abs(-TWO_SQRT2) == TWO_SQRT2
        assert abs(TWO_SQRT2) == TWO_SQRT2


class TestSqrt:
    @pytest.mark.parametrize(
        "value,expected",
        [
            (ExactScalar(2), SQRT2),
            (ExactScalar(3), SQRT3),
            (ExactScalar(6), SQRT6),
            (ExactScalar(Fraction(9, 4)), ExactScalar(Fraction(3, 2))),
            (ExactScalar(8), ExactScalar(0, 2)),
            (ExactScalar(Fraction(1, 3)), ExactScalar(0, 0, Fraction(1, 3))),
            (ExactScalar(0), ZERO),
        ],
    )
    def test_representable_roots(self, value, expected):
        root = value.sqrt()
        assert root == expected
        assert root * root == value

    @pytest.mark.parametrize("value", [ExactScalar(5), SQRT2, ExactScalar(-1)])
    def test_unrepresentable_roots_raise(self, value):
        with pytest.raises(ValueError):
            value.sqrt()


class TestJson:
    def test_round_trip(self):
        x = ExactScalar(Fraction(-3, 7), Fraction(1, 2), 0, Fraction(5, 6))
        obj = x.to_json()
        assert obj == {"a": "-3/7", "b": "1/2", "c": "0/1", "d": "5/6"}
        assert ExactScalar.from_json(obj) == x

    def test_complex_round_trip(self):
        z = ExactComplex(SQRT2, ExactScalar(Fraction(1, 3)))
        assert ExactComplex.from_json(z.to_json()) == z


class TestExactComplex:
    def test_conjugation_involution(self):
        rng = random.Random(17)
        for _ in range(50):
            z = ExactComplex(rand_scalar(rng), rand_scalar(rng))
            assert z.conjugate().conjugate() == z

    def test_abs2_nonnegative(self):
        rng = random.Random(19)
        for _ in range(50):
            z = ExactComplex(rand_scalar(rng), rand_scalar(rng))
            assert z.abs2().sign() >= 0

    def test_i_squared(self):
        i = ExactComplex(0, 1)
        assert i * i == ExactComplex(-1)

    def test_division_round_trip(self):
        z = ExactComplex(ONE + SQRT2, SQRT3)
        w = ExactComplex(SQRT2, ExactScalar(Fraction(-1, 2)))
        assert (z / w) * w == z

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ExactComplex(1) / ExactComplex(0)

    def test_real_part_guard(self):
        assert ExactComplex(SQRT2).real_part() == SQRT2
        with pytest.raises(ValueError):
            ExactComplex(0, 1).real_part()

    def test_to_complex(self):
        z = ExactComplex(SQRT2, ONE)
        assert abs(z.to_complex() - complex(2**0.5, 1.0)) < 1e-15


class TestFormatting:
    def test_strings(self):
        assert str(ZERO) == "0"
        assert str(TWO_SQRT2) == "2√2"
        assert str(-SQRT2 / 4) == "-√2/4"
        assert str(ONE + SQRT2 / 2) == "1 + √2/2"
        assert str(ExactComplex(0, 1)) == "i"
