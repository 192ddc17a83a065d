import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from bernstein_gap.core.errors import NonDivisible
from bernstein_gap.core.exact_core import (
    DensePoly,
    binomial,
    binomial_row,
    convolve,
    divide_by_z_squared,
    poly_add,
    poly_eval,
    poly_from_linear,
    poly_mul,
    poly_pow,
    poly_scale,
    poly_sub,
    taylor_coeffs_at,
)

small_polys = st.lists(st.integers(min_value=-5, max_value=5), max_size=21).map(DensePoly)
points = st.fractions(min_value=-2, max_value=2, max_denominator=12)


class TestBinomial(unittest.TestCase):
    """Test cases for binomial coefficients"""

    def test_small_entry(self):
        """Test a small Pascal triangle entry."""
        self.assertEqual(binomial(5, 2), 10)

    def test_k_zero(self):
        """Test that C(n, 0) is 1 for any n."""
        for n in range(0, 30):
            self.assertEqual(binomial(n, 0), 1)

    def test_k_greater_than_n(self):
        """Test that C(n, k) is 0 when k > n."""
        self.assertEqual(binomial(3, 7), 0)

    def test_central_coefficient_against_product_formula(self):
        """Test C(52, 26) against the multiplicative formula."""
        product = Fraction(1)
        for i in range(1, 27):
            product *= Fraction(26 + i, i)
        self.assertEqual(product.denominator, 1)
        self.assertEqual(binomial(52, 26), product.numerator)

    def test_binomial_row(self):
        """Test that a row matches the individual coefficients."""
        self.assertEqual(binomial_row(4), [1, 4, 6, 4, 1])


class TestDensePoly(unittest.TestCase):
    """Test cases for polynomial construction and arithmetic"""

    def test_trailing_zeros_stripped(self):
        """Test that normalization removes trailing zeros."""
        p = DensePoly((1, 2, 0, 0))
        self.assertEqual(p.coeffs, (Fraction(1), Fraction(2)))
        self.assertEqual(p.degree, 1)

    def test_zero_polynomial(self):
        """Test that the zero polynomial is the empty sequence."""
        self.assertTrue(DensePoly((0, 0)).is_zero)
        self.assertEqual(DensePoly.zero().degree, -1)

    def test_mul_difference_of_squares(self):
        """Test (1 + z)(1 - z) = 1 - z^2."""
        self.assertEqual(poly_mul(DensePoly((1, 1)), DensePoly((1, -1))), DensePoly((1, 0, -1)))

    def test_mul_by_zero(self):
        """Test that multiplying by zero gives zero."""
        self.assertEqual(poly_mul(DensePoly((3, 4)), DensePoly.zero()), DensePoly.zero())

    def test_mul_binomial_theorem(self):
        """Test (1 + z)^2 (1 + z)^3 against binomial row 5."""
        one_plus_z = poly_from_linear(1, 1)
        product = poly_mul(poly_pow(one_plus_z, 2), poly_pow(one_plus_z, 3))
        self.assertEqual(list(product.coeffs), [Fraction(c) for c in binomial_row(5)])

    def test_pow_zero(self):
        """Test that any polynomial to the power 0 is 1."""
        self.assertEqual(poly_pow(DensePoly((1, 1)), 0), DensePoly.one())

    def test_pow_half_square(self):
        """Test (1 + z/2)^2 = 1 + z + z^2/4."""
        self.assertEqual(poly_pow(poly_from_linear(1, Fraction(1, 2)), 2), DensePoly((1, 1, Fraction(1, 4))))

    def test_pow_ten(self):
        """Test (1 + z)^10 against binomial coefficients."""
        p = poly_pow(poly_from_linear(1, 1), 10)
        self.assertEqual([int(c) for c in p.coeffs], binomial_row(10))

    def test_operators(self):
        """Test the operator overloads."""
        p = DensePoly((1, 2))
        q = DensePoly((0, 1))
        self.assertEqual(p + q, DensePoly((1, 3)))
        self.assertEqual(p - p, DensePoly.zero())
        self.assertEqual(p * q, DensePoly((0, 1, 2)))
        self.assertEqual(q ** 3, DensePoly((0, 0, 0, 1)))
        self.assertEqual(p(Fraction(1, 2)), Fraction(2))

    def test_add_and_scale(self):
        """Test addition cancels leading terms and scaling by zero gives zero."""
        p = DensePoly((1, 2, 3))
        q = DensePoly((0, 0, -3))
        self.assertEqual(poly_add(p, q), DensePoly((1, 2)))
        self.assertEqual(poly_scale(p, Fraction(1, 2)), DensePoly((Fraction(1, 2), 1, Fraction(3, 2))))
        self.assertTrue(poly_scale(p, 0).is_zero)

    def test_padded(self):
        """Test zero padding and its refusal to truncate."""
        self.assertEqual(DensePoly((1,)).padded(3), [1, 0, 0])
        with self.assertRaises(ValueError):
            DensePoly((1, 2, 3)).padded(2)


class TestTaylorShift(unittest.TestCase):
    """Test cases for re-expansion around a point"""

    def test_square_at_minus_one(self):
        """Test z^2 re-expanded at -1 is (w - 1)^2."""
        self.assertEqual(taylor_coeffs_at(DensePoly((0, 0, 1)), -1), [1, -2, 1])

    def test_constant(self):
        """Test a constant polynomial keeps its value at any point."""
        self.assertEqual(taylor_coeffs_at(DensePoly((7,)), Fraction(3, 5)), [7])

    def test_first_entry_is_value(self):
        """Test the leading Taylor coefficient equals p(a)."""
        p = poly_pow(poly_from_linear(1, Fraction(1, 2)), 4)
        self.assertEqual(taylor_coeffs_at(p, -1)[0], Fraction(1, 16))

    @given(small_polys)
    def test_at_zero_is_identity(self, p):
        """Test that expanding at 0 returns the stored coefficients."""
        self.assertEqual(taylor_coeffs_at(p, 0), list(p.coeffs))

    @given(small_polys, small_polys, points)
    @settings(max_examples=60, deadline=None)
    def test_shift_commutes_with_product(self, p, q, a):
        """Test that the shift of a product is the convolution of the shifts."""
        self.assertEqual(
            DensePoly(taylor_coeffs_at(poly_mul(p, q), a)),
            DensePoly(convolve(taylor_coeffs_at(p, a), taylor_coeffs_at(q, a))),
        )

    @given(small_polys, points, points)
    @settings(deadline=None)
    def test_shift_evaluates_consistently(self, p, a, w):
        """Test that the shifted polynomial at w equals p(a + w)."""
        shifted = DensePoly(taylor_coeffs_at(p, a))
        self.assertEqual(poly_eval(shifted, w), poly_eval(p, a + w))


class TestDivideByZSquared(unittest.TestCase):
    """Test cases for exact division by z^2"""

    def test_simple(self):
        """Test z^2 + z^3 divided by z^2."""
        self.assertEqual(divide_by_z_squared(DensePoly((0, 0, 1, 1))), DensePoly((1, 1)))

    def test_zero(self):
        """Test that zero divides to zero."""
        self.assertEqual(divide_by_z_squared(DensePoly.zero()), DensePoly.zero())

    def test_quartic_difference(self):
        """Test ((1 + z/2)^4 - (1 + z)^2) / z^2."""
        diff = poly_sub(poly_pow(poly_from_linear(1, Fraction(1, 2)), 4), poly_pow(poly_from_linear(1, 1), 2))
        self.assertEqual(divide_by_z_squared(diff), DensePoly((Fraction(1, 2), Fraction(1, 2), Fraction(1, 16))))

    def test_nonzero_low_terms_raise(self):
        """Test that a surviving constant or linear term raises NonDivisible."""
        with self.assertRaises(NonDivisible):
            divide_by_z_squared(DensePoly((1, 0, 1)))
        with self.assertRaises(NonDivisible):
            divide_by_z_squared(DensePoly((0, 2, 1)))

    @given(small_polys)
    def test_inverse_of_z_squared(self, q):
        """Test divide_by_z_squared(z^2 q) == q."""
        self.assertEqual(divide_by_z_squared(poly_mul(DensePoly((0, 0, 1)), q)), q)


class TestRationalNormalization(unittest.TestCase):
    """Test cases for lowest-terms storage"""

    def test_coefficients_in_lowest_terms(self):
        """Test coefficients are reduced with positive denominators."""
        p = DensePoly((Fraction(2, -4), Fraction(6, 8)))
        self.assertEqual(p.coeffs[0].numerator, -1)
        self.assertEqual(p.coeffs[0].denominator, 2)
        self.assertEqual(p.coeffs[1], Fraction(3, 4))
        self.assertEqual(DensePoly(p.coeffs), p)


if __name__ == '__main__':
    unittest.main()
