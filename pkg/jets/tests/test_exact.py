from fractions import Fraction

from django.test import SimpleTestCase, override_settings

from jets.exact import RationalMatrix, bell_number, binomial, mat_inverse, mat_mul, mat_vec, pivot_columns, rational
from jets.exceptions import JetInputError, SingularMatrixError
from jets.sampling import RationalSampler


class RationalMatrixTests(SimpleTestCase):

    def test_identity_is_neutral(self):
        m = RationalMatrix.from_rows([[1, Fraction(1, 2)], [-3, 4]])
        self.assertEqual(mat_mul(RationalMatrix.identity(2), m), m)
        self.assertEqual(m @ RationalMatrix.identity(2), m)

    def test_rank_one_product(self):
        e = RationalMatrix.from_rows([[0, 1], [0, 0]])
        f = RationalMatrix.from_rows([[0, 0], [1, 0]])
        self.assertEqual(mat_mul(e, f), RationalMatrix.from_rows([[1, 0], [0, 0]]))

    def test_product_matches_entrywise_sum(self):
        s = RationalSampler(3)
        a, b = s.matrix(3), s.matrix(3)
        product = mat_mul(a, b)
        for i in range(3):
            for j in range(3):
                self.assertEqual(product[i, j], sum(a[i, m] * b[m, j] for m in range(3)))

    def test_shape_mismatch(self):
        with self.assertRaises(JetInputError):
            mat_mul(RationalMatrix.zeros(2, 3), RationalMatrix.zeros(2, 3))
        with self.assertRaises(JetInputError):
            RationalMatrix.zeros(2) + RationalMatrix.zeros(3)

    def test_unipotent_inverse(self):
        g = RationalMatrix.from_rows([[1, 1], [0, 1]])
        self.assertEqual(mat_inverse(g), RationalMatrix.from_rows([[1, -1], [0, 1]]))
        self.assertEqual(mat_inverse(RationalMatrix.identity(4)), RationalMatrix.identity(4))

    def test_inverse_multiplies_back(self):
        s = RationalSampler(11)
        found = 0
        while found < 5:
            a = s.matrix(3)
            try:
                inverse = mat_inverse(a)
            except SingularMatrixError:
                continue
            found += 1
            self.assertEqual(mat_mul(a, inverse), RationalMatrix.identity(3))
            self.assertEqual(mat_mul(inverse, a), RationalMatrix.identity(3))

    def test_inverse_needs_row_swap(self):
        a = RationalMatrix.from_rows([[0, 2], [3, 0]])
        self.assertEqual(mat_inverse(a), RationalMatrix.from_rows([[0, Fraction(1, 3)], [Fraction(1, 2), 0]]))

    def test_singular(self):
        with self.assertRaises(SingularMatrixError):
            mat_inverse(RationalMatrix.from_rows([[1, 2], [2, 4]]))
        with self.assertRaises(JetInputError):
            mat_inverse(RationalMatrix.zeros(2, 3))

    def test_pivot_columns_and_mat_vec(self):
        a = RationalMatrix.from_rows([[1, 2, 3], [2, 4, 7]])
        self.assertEqual(pivot_columns(a), [0, 2])
        self.assertEqual(mat_vec(a, [1, 0, 1]), (Fraction(4), Fraction(9)))

    def test_floats_rejected(self):
        with self.assertRaises(JetInputError):
            rational(0.5)
        with self.assertRaises(JetInputError):
            RationalMatrix.from_rows([[1.0]])


class CombinatoricsTests(SimpleTestCase):

    def test_binomial(self):
        self.assertEqual(binomial(2, 1), 2)
        self.assertEqual(binomial(5, 0), 1)
        self.assertEqual(binomial(7, 3), 35)
        self.assertEqual(binomial(3, 5), 0)
        self.assertEqual(binomial(3, -1), 0)

    def test_bell_numbers(self):
        self.assertEqual(bell_number(0), 1)
        self.assertEqual(bell_number(3), 5)
        self.assertEqual(bell_number(8), 4140)

    def test_bell_bound(self):
        with self.assertRaises(JetInputError):
            bell_number(13)
        with self.assertRaises(JetInputError):
            bell_number(-1)

    @override_settings(JETGROUPS={'MAX_BELL_INDEX': 4})
    def test_bell_bound_is_configurable(self):
        self.assertEqual(bell_number(4), 15)
        with self.assertRaises(JetInputError):
            bell_number(5)
