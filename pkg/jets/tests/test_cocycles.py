from itertools import product

from django.test import SimpleTestCase

from jets.algebras import AlgebraElement, adjoint, bracket, builtin
from jets.cocycles import (
    _linear_coefficient_weights, algebra_cocycle, bilinear_part, group_cocycle, jet_algebra_bracket,
    polarized_cocycle, verify_algebra_cocycle, verify_group_cocycle,
)
from jets.exceptions import JetInputError
from jets.jet_group import (
    LEFT, PARTITIONS, JetAlgebraElement, JetElement, identity_jet, jet_multiply, lift_jet,
)
from jets.sampling import RationalSampler


class GroupCocycleTests(SimpleTestCase):

    def setUp(self):
        self.a = builtin('sl2')
        self.s = RationalSampler(163)

    def br(self, x, y):
        return bracket(self.a, x, y)

    def test_second_order(self):
        A, B = self.s.jet_element(self.a, 1), self.s.jet_element(self.a, 1)
        expected = self.br(A.x[0], adjoint(A.g, B.x[0]))
        self.assertEqual(group_cocycle(self.a, 2, A, B), expected)

    def test_third_order_fiber(self):
        A = self.s.jet_element(self.a, 2, with_group=False)
        B = self.s.jet_element(self.a, 2, with_group=False)
        (x1, x2), (y1, y2) = A.x, B.x
        expected = self.br(x1, self.br(x1, y1)) + self.br(x2, y1) + self.br(x1, y2).scale(2)
        self.assertEqual(group_cocycle(self.a, 3, A, B), expected)
        self.assertEqual(group_cocycle(self.a, 3, A, B, PARTITIONS), expected)

    def test_normalized(self):
        for k in range(2, 6):
            A = self.s.jet_element(self.a, k - 1)
            e = identity_jet(self.a, k - 1)
            self.assertTrue(group_cocycle(self.a, k, A, e).is_zero)
            self.assertTrue(group_cocycle(self.a, k, e, A).is_zero)

    def test_independent_of_lifts(self):
        k = 4
        A, B = self.s.jet_element(self.a, k - 1), self.s.jet_element(self.a, k - 1)
        u, v = self.s.element(self.a), self.s.element(self.a)
        top = jet_multiply(lift_jet(A, u), lift_jet(B, v)).x[-1]
        self.assertEqual(top - u - adjoint(A.g, v), group_cocycle(self.a, k, A, B))

    def test_operand_checks(self):
        A = self.s.jet_element(self.a, 2)
        with self.assertRaises(JetInputError):
            group_cocycle(self.a, 1, A, A)
        with self.assertRaises(JetInputError):
            group_cocycle(self.a, 4, A, A)
        with self.assertRaises(JetInputError):
            group_cocycle(self.a, 3, identity_jet(self.a, 2, LEFT), A)


class AlgebraCocycleTests(SimpleTestCase):

    def setUp(self):
        self.a = builtin('sl2')
        self.s = RationalSampler(167)

    def test_second_order(self):
        A, B = self.s.jet_algebra_element(self.a, 1), self.s.jet_algebra_element(self.a, 1)
        self.assertEqual(algebra_cocycle(self.a, 2, A, B), bracket(self.a, A.x[0], B.x[0]).scale(2))

    def test_third_order(self):
        A, B = self.s.jet_algebra_element(self.a, 2), self.s.jet_algebra_element(self.a, 2)
        expected = bracket(self.a, A.x[0], B.x[1]).scale(3) + bracket(self.a, A.x[1], B.x[0]).scale(3)
        self.assertEqual(algebra_cocycle(self.a, 3, A, B), expected)

    def test_alternating(self):
        for k in range(2, 6):
            A = self.s.jet_algebra_element(self.a, k - 1)
            self.assertTrue(algebra_cocycle(self.a, k, A, A).is_zero)

    def test_polarization_of_second_order(self):
        A, B = self.s.jet_algebra_element(self.a, 1), self.s.jet_algebra_element(self.a, 1)
        self.assertEqual(polarized_cocycle(self.a, 2, A, B), bracket(self.a, A.x[0], B.x[0]).scale(2))

    def test_polarization_matches(self):
        for k in range(2, 6):
            A, B = self.s.jet_algebra_element(self.a, k - 1), self.s.jet_algebra_element(self.a, k - 1)
            with self.subTest(k=k):
                self.assertEqual(polarized_cocycle(self.a, k, A, B), algebra_cocycle(self.a, k, A, B))

    def test_bilinear_part_of_third_order(self):
        A, B = self.s.jet_algebra_element(self.a, 2), self.s.jet_algebra_element(self.a, 2)
        (x1, x2), (y1, y2) = A.x, B.x
        expected = bracket(self.a, x2, y1) + bracket(self.a, x1, y2).scale(2)
        self.assertEqual(bilinear_part(self.a, 3, A, B), expected)


class JetAlgebraBracketTests(SimpleTestCase):

    def test_first_component(self):
        a = builtin('so3')
        s = RationalSampler(173)
        A, B = s.jet_algebra_element(a, 3), s.jet_algebra_element(a, 3)
        result = jet_algebra_bracket(A, B)
        self.assertEqual(result.xi, bracket(a, A.xi, B.xi))
        self.assertEqual(result.x[0], bracket(a, A.xi, B.x[0]) + bracket(a, A.x[0], B.xi))

    def test_jacobi(self):
        a = builtin('sl2')
        s = RationalSampler(179)
        A, B, C = (s.jet_algebra_element(a, 3) for _ in range(3))
        total = [AlgebraElement.zero(a)] * 4
        for u, v, w in ((A, B, C), (B, C, A), (C, A, B)):
            term = jet_algebra_bracket(u, jet_algebra_bracket(v, w))
            total = [t + c for t, c in zip(total, term.components)]
        self.assertTrue(all(t.is_zero for t in total))

    def test_antisymmetrized_product_on_fibers(self):
        a = builtin('so3')
        s = RationalSampler(191)
        k = 4
        A, B = s.jet_element(a, k, with_group=False), s.jet_element(a, k, with_group=False)
        weights = _linear_coefficient_weights(k)

        def st_part(A, B):
            total = [AlgebraElement.zero(a)] * k
            for r, q in product(range(k + 1), repeat=2):
                scaled = jet_multiply(JetElement(k, A.g, [x.scale(r) for x in A.x]),
                                      JetElement(k, B.g, [y.scale(q) for y in B.x]))
                total = [t + z.scale(weights[r] * weights[q]) for t, z in zip(total, scaled.x)]
            return total

        antisymmetrized = [u - v for u, v in zip(st_part(A, B), st_part(B, A))]
        zero = AlgebraElement.zero(a)
        bracketed = jet_algebra_bracket(JetAlgebraElement(k, zero, A.x), JetAlgebraElement(k, zero, B.x))
        self.assertTrue(bracketed.xi.is_zero)
        self.assertEqual(antisymmetrized, list(bracketed.x))

    def test_orders_must_match(self):
        a = builtin('sl2')
        s = RationalSampler(181)
        with self.assertRaises(JetInputError):
            jet_algebra_bracket(s.jet_algebra_element(a, 2), s.jet_algebra_element(a, 3))
        with self.assertRaises(JetInputError):
            JetAlgebraElement(2, AlgebraElement.zero(a), (AlgebraElement.zero(a),))


class VerificationTests(SimpleTestCase):

    def test_group_cocycle_identity(self):
        for k in range(2, 5):
            with self.subTest(k=k):
                report = verify_group_cocycle(builtin('sl2'), k, trials=3, seed=k)
                self.assertTrue(report.passed, report.counterexample)

    def test_algebra_cocycle_identity(self):
        for name in ('sl2', 'heis3', 'abelian(2)'):
            with self.subTest(algebra=name):
                report = verify_algebra_cocycle(builtin(name), 3, trials=3, seed=5)
                self.assertTrue(report.passed, report.counterexample)
                self.assertFalse(report.skipped)

    def test_leibniz_group_cocycle(self):
        report = verify_group_cocycle(builtin('leibniz2'), 3, trials=3, seed=1)
        self.assertTrue(report.passed, report.counterexample)

    def test_leibniz_algebra_cocycle_is_skipped(self):
        report = verify_algebra_cocycle(builtin('leibniz2'), 3, trials=3, seed=1)
        self.assertTrue(report.skipped)
        self.assertEqual(report.status, 'skipped')

    def test_perturbed_cocycle_is_caught(self):
        a = builtin('sl2')

        def perturbed(a, k, A, B):
            return group_cocycle(a, k, A, B) + bracket(a, A.x[0], adjoint(A.g, B.x[k - 2]))

        report = verify_group_cocycle(a, 3, trials=3, seed=2, cocycle=perturbed)
        self.assertFalse(report.passed)
        self.assertEqual(report.status, 'fail')
        self.assertIsNotNone(report.counterexample)
