from django.test import SimpleTestCase

from jets.algebras import AUTOMORPHISM, MATRIX_POINT, builtin, validate_group_point
from jets.sampling import MODULUS, RationalSampler
from jets.tangent_group import is_symmetric


class RationalSamplerTests(SimpleTestCase):

    def test_reproducible(self):
        a = builtin('sl2')
        first, second = RationalSampler(42), RationalSampler(42)
        self.assertEqual(first.jet_element(a, 3), second.jet_element(a, 3))
        self.assertNotEqual(RationalSampler(43).jet_element(a, 3), RationalSampler(42).jet_element(a, 3))

    def test_recurrence(self):
        s = RationalSampler(0)
        self.assertEqual(s.draw(), 1442695040888963407 >> 33)
        self.assertEqual(s.state, 1442695040888963407)
        self.assertEqual(RationalSampler(MODULUS + 5).state, 5)

    def test_small_rationals(self):
        s = RationalSampler(1)
        for _ in range(200):
            q = s.rational()
            self.assertLessEqual(abs(q.numerator), 9)
            self.assertIn(q.denominator, (1, 2, 3, 4))

    def test_group_points(self):
        s = RationalSampler(2)
        for name in ('sl2', 'so3', 'heis3', 'nilpotent_upper(4)'):
            a = builtin(name)
            g = s.group_point(a)
            self.assertEqual(g.kind, MATRIX_POINT)
            validate_group_point(a, g)
        abelian = builtin('abelian(3)')
        self.assertEqual(s.group_point(abelian).kind, AUTOMORPHISM)
        self.assertTrue(s.group_point(builtin('leibniz2')).is_identity)

    def test_elements(self):
        a = builtin('heis3')
        s = RationalSampler(3)
        self.assertEqual(len(s.tangent_element(a, 3).components), 7)
        self.assertTrue(is_symmetric(s.symmetric_tangent_element(a, 3)))
        self.assertTrue(s.jet_element(a, 2, with_group=False).g.is_identity)
        self.assertEqual(s.jet_algebra_element(a, 2).k, 2)
