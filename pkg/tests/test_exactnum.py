from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sylsum.exactnum import (
    QQ,
    DivideByZero,
    FieldMismatch,
    InvalidField,
    NumberField,
    ZeroDivisor,
    canonical_str,
    cyclotomic_field,
    element_from_obj,
    element_to_obj,
    pretty_str,
    quadratic_field,
    sqrt_of,
    to_element,
    zeta,
)

# classic cyclotomic polynomial coefficients, constant term first
CYCLOTOMIC_TABLE = {
    1: [-1, 1],
    2: [1, 1],
    3: [1, 1, 1],
    4: [1, 0, 1],
    5: [1, 1, 1, 1, 1],
    6: [1, -1, 1],
    7: [1, 1, 1, 1, 1, 1, 1],
    8: [1, 0, 0, 0, 1],
    9: [1, 0, 0, 1, 0, 0, 1],
    10: [1, -1, 1, -1, 1],
    11: [1] * 11,
    12: [1, 0, -1, 0, 1],
}


def poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


class TestCyclotomicField:
    @pytest.mark.parametrize("n,coeffs", sorted(CYCLOTOMIC_TABLE.items()))
    def test_modulus_matches_table(self, n, coeffs):
        assert list(cyclotomic_field(n).modulus) == coeffs

    @pytest.mark.parametrize("n", range(1, 13))
    def test_product_over_divisors_is_x_n_minus_1(self, n):
        # independent check: prod of the moduli over all divisors of n
        prod = [Fraction(1)]
        for d in range(1, n + 1):
            if n % d == 0:
                prod = poly_mul(prod, cyclotomic_field(d).modulus)
        expected = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
        assert prod == expected

    def test_degree_one_cases(self):
        assert cyclotomic_field(1).degree == 1
        assert zeta(1) == 1
        assert zeta(2) == -1

    @pytest.mark.parametrize("n", range(1, 13))
    def test_zeta_order(self, n):
        z = zeta(n)
        for k in range(61):
            assert (z**k).is_one() == (k % n == 0)


class TestQuadraticField:
    def test_sqrt5_modulus(self):
        assert list(quadratic_field(5).modulus) == [-5, 0, 1]

    def test_gaussian_modulus(self):
        assert list(quadratic_field(-1).modulus) == [1, 0, 1]

    def test_omega_in_sqrt_minus_3(self):
        field = quadratic_field(-3)
        assert list(field.modulus) == [3, 0, 1]
        omega = field.element([Fraction(-1, 2), Fraction(1, 2)])
        # a primitive cube root of unity: omega^3 == 1, omega != 1
        assert (omega**3).is_one() and not omega.is_one()

    @pytest.mark.parametrize("d", [0, 1, 4, 12, -4, 50])
    def test_rejects_bad_d(self, d):
        with pytest.raises(InvalidField):
            quadratic_field(d)


class TestElementArithmetic:
    def test_sqrt5_squares_to_5(self):
        r = sqrt_of(5)
        assert r * r == 5

    def test_zeta8_times_zeta8_cubed(self):
        z = zeta(8)
        assert z * z**3 == -1

    def test_conjugate_sum(self):
        field = quadratic_field(-3)
        omega = field.element([Fraction(-1, 2), Fraction(1, 2)])
        omega_bar = field.element([Fraction(-1, 2), Fraction(-1, 2)])
        assert omega + omega_bar == -1

    def test_mixed_scalar_ops(self):
        z = zeta(8)
        assert 2 * z - z == z
        assert (z + Fraction(1, 2)) - z == Fraction(1, 2)

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatch):
            zeta(8) + sqrt_of(5)
        with pytest.raises(FieldMismatch):
            zeta(8) == sqrt_of(5)

    def test_rational_valued_elements_compare_across_fields(self):
        assert zeta(8) ** 8 == QQ.one
        assert to_element(3, quadratic_field(5)) == to_element(3)


class TestInverse:
    def test_rational_inverse(self):
        assert to_element(2).inverse() == Fraction(1, 2)

    def test_zeta8_minus_one_roundtrip(self):
        a = zeta(8) - 1
        assert a * a.inverse() == 1

    def test_zero_divisor_in_reducible_ring(self):
        ring = NumberField([-1, 0, 1])  # x^2 - 1 = (x-1)(x+1)
        with pytest.raises(ZeroDivisor):
            ring.element([-1, 1]).inverse()

    def test_zero_has_no_inverse(self):
        with pytest.raises(DivideByZero):
            QQ.zero.inverse()


class TestPower:
    def test_zeta8_to_the_8th(self):
        assert (zeta(8) ** 8).is_one()

    def test_minus_two_to_the_22nd(self):
        assert to_element(-2) ** 22 == 4194304  # 2**22

    def test_zero_to_the_zero_is_one(self):
        assert QQ.zero**0 == 1
        assert cyclotomic_field(8).zero ** 0 == 1

    def test_negative_exponent(self):
        z = zeta(8)
        assert z**-1 == z**7


class TestIsOne:
    def test_minus_one_even_power(self):
        assert (to_element(-1) ** 6).is_one()

    def test_zeta8_fourth_is_minus_one(self):
        z4 = zeta(8) ** 4
        assert not z4.is_one()
        assert z4 == -1

    def test_rational_one(self):
        assert QQ.one.is_one()


rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=12
)


def elements(field):
    return st.lists(
        rationals, min_size=field.degree, max_size=field.degree
    ).map(lambda cs: field.element(cs))


@settings(max_examples=60, deadline=None)
@given(elements(cyclotomic_field(8)), elements(cyclotomic_field(8)), elements(cyclotomic_field(8)))
def test_ring_axioms_zeta8(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=60, deadline=None)
@given(elements(quadratic_field(5)), elements(quadratic_field(5)), elements(quadratic_field(5)))
def test_ring_axioms_sqrt5(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(elements(cyclotomic_field(8)))
def test_inverse_roundtrip_zeta8(a):
    if not a.is_zero():
        assert (a * a.inverse()).is_one()


@settings(max_examples=60, deadline=None)
@given(elements(quadratic_field(-3)))
def test_inverse_roundtrip_quadratic(a):
    if not a.is_zero():
        assert (a * a.inverse()).is_one()


@settings(max_examples=40, deadline=None)
@given(
    elements(cyclotomic_field(8)),
    st.integers(min_value=0, max_value=50),
    st.integers(min_value=0, max_value=50),
)
def test_power_additivity(a, m, n):
    assert a ** (m + n) == a**m * a**n


@settings(max_examples=60, deadline=None)
@given(elements(cyclotomic_field(8)), elements(cyclotomic_field(8)))
def test_coefficients_stay_normalized(a, b):
    for e in (a + b, a - b, a * b):
        for c in e.coeffs:
            assert c.denominator > 0
            assert gcd(abs(c.numerator), c.denominator) == 1


class TestSerialization:
    @pytest.mark.parametrize(
        "elem",
        [
            to_element(Fraction(-3, 2)),
            zeta(8) ** 3 - 2 * zeta(8) + 1,
            quadratic_field(5).element([0, Fraction(-1, 5)]),
            NumberField([-1, 0, 1]).element([Fraction(1, 3), 2]),
        ],
    )
    def test_obj_roundtrip(self, elem):
        assert element_from_obj(element_to_obj(elem)) == elem

    def test_obj_uses_fraction_strings(self):
        obj = element_to_obj(quadratic_field(5).element([0, Fraction(-1, 5)]))
        assert obj["coeffs"] == ["0", "-1/5"]
        assert obj["modulus"] == ["-5", "0", "1"]

    def test_canonical_forms(self):
        assert canonical_str(to_element(Fraction(-3, 2))) == "-3/2"
        assert canonical_str(zeta(8) ** 3) == "zeta(8)^3"
        assert canonical_str(quadratic_field(5).element([0, Fraction(-1, 5)])) == "q(5; 0, -1/5)"
        assert canonical_str(NumberField([-1, 0, 1]).element([2, 1])) == "nf([-1,0,1]; [2,1])"

    def test_pretty_forms(self):
        w = quadratic_field(-3).element([Fraction(-443, 2), Fraction(391, 2)])
        assert pretty_str(w) == "(-443+391*sqrt(-3))/2"
        assert pretty_str(to_element(7)) == "7"
        assert pretty_str(zeta(8) ** 2 - 4) == "-4+zeta(8)^2"
