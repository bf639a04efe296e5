from django.test import SimpleTestCase

from jets.algebras import AlgebraElement, GroupPoint, bracket, builtin
from jets.exceptions import JetInputError
from jets.jet_group import LEFT, RIGHT, jet_multiply
from jets.sampling import RationalSampler
from jets.tangent_group import (
    Permutation, TangentElement, embed_jet, factor_order, factor_pure, fold_product, identity_tangent,
    is_symmetric, mask_label, parse_mask, permute, project_jet, pure_tangent, tangent_inverse,
    tangent_multiply,
)


def fiber_element(s, a, k):
    return s.tangent_element(a, k, with_group=False)


class MultiIndexTests(SimpleTestCase):

    def test_labels(self):
        self.assertEqual(parse_mask('13', 3), 0b101)
        self.assertEqual(mask_label(0b110), '23')

    def test_bad_labels(self):
        for label in ('', '31', '11', '4', 'x'):
            with self.subTest(label=label), self.assertRaises(JetInputError):
                parse_mask(label, 3)


class MultiplicationTests(SimpleTestCase):

    def setUp(self):
        self.a = builtin('sl2')
        self.s = RationalSampler(71)

    def br(self, x, y):
        return bracket(self.a, x, y)

    def test_third_order_fiber(self):
        A, B = fiber_element(self.s, self.a, 3), fiber_element(self.s, self.a, 3)
        x, y = A.component, B.component
        z = tangent_multiply(A, B)
        m = {label: parse_mask(label, 3) for label in ('1', '2', '3', '12', '13', '23', '123')}
        self.assertEqual(z.component(m['1']), x(m['1']) + y(m['1']))
        self.assertEqual(z.component(m['12']), x(m['12']) + y(m['12']) + self.br(x(m['1']), y(m['2'])))
        self.assertEqual(
            z.component(m['123']),
            x(m['123']) + y(m['123']) + self.br(x(m['1']), y(m['23'])) + self.br(x(m['2']), y(m['13']))
            + self.br(x(m['12']), y(m['3'])) + self.br(x(m['2']), self.br(x(m['1']), y(m['3']))),
        )

    def test_identity(self):
        A = self.s.tangent_element(self.a, 3)
        e = identity_tangent(self.a, 3)
        self.assertEqual(tangent_multiply(A, e), A)
        self.assertEqual(tangent_multiply(e, A), A)

    def test_associativity(self):
        for name in ('sl2', 'heis3'):
            a = builtin(name)
            for side in (RIGHT, LEFT):
                A, B, C = (self.s.tangent_element(a, 3, side) for _ in range(3))
                with self.subTest(algebra=name, side=side):
                    self.assertEqual(tangent_multiply(tangent_multiply(A, B), C),
                                     tangent_multiply(A, tangent_multiply(B, C)))

    def test_leibniz_fiber_associativity(self):
        a = builtin('leibniz2')
        A, B, C = (fiber_element(self.s, a, 3) for _ in range(3))
        self.assertEqual(tangent_multiply(tangent_multiply(A, B), C), tangent_multiply(A, tangent_multiply(B, C)))

    def test_mismatched_orders(self):
        with self.assertRaises(JetInputError):
            tangent_multiply(identity_tangent(self.a, 2), identity_tangent(self.a, 3))
        with self.assertRaises(JetInputError):
            tangent_multiply(identity_tangent(self.a, 2), identity_tangent(self.a, 2, LEFT))

    def test_component_count(self):
        with self.assertRaises(JetInputError):
            TangentElement(2, GroupPoint.identity(), identity_tangent(self.a, 3).components)


class InverseTests(SimpleTestCase):

    def test_first_order(self):
        a = builtin('sl2')
        A = fiber_element(RationalSampler(73), a, 1)
        self.assertEqual(tangent_inverse(A).components, (-A.component(1),))

    def test_second_order_fiber(self):
        a = builtin('sl2')
        A = fiber_element(RationalSampler(79), a, 2)
        x1, x2, x12 = A.components
        self.assertEqual(tangent_inverse(A).components, (-x1, -x2, -x12 + bracket(a, x1, x2)))

    def test_multiply_back(self):
        s = RationalSampler(83)
        for name in ('heis3', 'so3'):
            a = builtin(name)
            for side in (RIGHT, LEFT):
                with self.subTest(algebra=name, side=side):
                    A = s.tangent_element(a, 3, side)
                    e = identity_tangent(a, 3, side)
                    self.assertEqual(tangent_multiply(A, tangent_inverse(A)), e)
                    self.assertEqual(tangent_multiply(tangent_inverse(A), A), e)


class SymmetricGroupTests(SimpleTestCase):

    def setUp(self):
        self.a = builtin('sl2')
        self.s = RationalSampler(89)

    def test_transposition(self):
        A = self.s.tangent_element(self.a, 2)
        swapped = permute(Permutation.transposition(2, 1, 2), A)
        self.assertEqual(swapped.component(0b01), A.component(0b10))
        self.assertEqual(swapped.component(0b10), A.component(0b01))
        self.assertEqual(swapped.component(0b11), A.component(0b11))

    def test_left_action(self):
        A = self.s.tangent_element(self.a, 3)
        self.assertEqual(permute(Permutation.identity(3), A), A)
        for sigma in Permutation.all(3):
            for tau in Permutation.all(3):
                self.assertEqual(permute(sigma.compose(tau), A), permute(sigma, permute(tau, A)))

    def test_fixed_points_are_symmetric_elements(self):
        symmetric = self.s.symmetric_tangent_element(self.a, 3)
        general = self.s.tangent_element(self.a, 3)
        for A in (symmetric, general):
            fixed = all(permute(sigma, A) == A for sigma in Permutation.all(3))
            self.assertEqual(fixed, is_symmetric(A))
        self.assertTrue(is_symmetric(symmetric))

    def test_distinct_first_order_components(self):
        x = AlgebraElement.basis_vector(self.a, 0)
        A = TangentElement.from_mapping(2, GroupPoint.identity(), {0b01: x, 0b10: x + x}, algebra=self.a)
        self.assertFalse(is_symmetric(A))

    def test_bad_permutations(self):
        with self.assertRaises(JetInputError):
            Permutation((1, 1, 2))
        with self.assertRaises(JetInputError):
            permute(Permutation.identity(2), self.s.tangent_element(self.a, 3))


class JetEmbeddingTests(SimpleTestCase):

    def test_embedding_is_multiplicative(self):
        a = builtin('sl2')
        s = RationalSampler(97)
        for _ in range(3):
            A, B = s.jet_element(a, 3), s.jet_element(a, 3)
            self.assertEqual(tangent_multiply(embed_jet(A), embed_jet(B)), embed_jet(jet_multiply(A, B)))

    def test_roundtrip(self):
        a = builtin('so3')
        A = RationalSampler(101).jet_element(a, 4)
        self.assertEqual(project_jet(embed_jet(A)), A)
        self.assertTrue(is_symmetric(tangent_inverse(embed_jet(A))))

    def test_project_needs_a_fixed_point(self):
        a = builtin('sl2')
        A = RationalSampler(103).tangent_element(a, 2)
        with self.assertRaises(JetInputError):
            project_jet(A)


class FactorizationTests(SimpleTestCase):

    def test_order(self):
        labels = [mask_label(m) for m in factor_order(3)]
        self.assertEqual(labels, ['123', '23', '13', '3', '12', '2', '1'])
        self.assertEqual(factor_order(1), (1,))
        self.assertEqual(len(factor_order(4)), 15)

    def test_first_order(self):
        a = builtin('sl2')
        A = RationalSampler(107).tangent_element(a, 1, with_group=False)
        self.assertEqual(factor_pure(A), [pure_tangent(a, 1, 1, A.component(1))])

    def test_fold_back(self):
        a = builtin('heis3')
        s = RationalSampler(109)
        A = fiber_element(s, a, 4)
        factors = factor_pure(A)
        self.assertEqual(len(factors), 15)
        self.assertEqual(fold_product(factors), A)

    def test_group_part_becomes_last_factor(self):
        a = builtin('sl2')
        A = RationalSampler(113).tangent_element(a, 3)
        self.assertFalse(A.g.is_identity)
        factors = factor_pure(A)
        self.assertEqual(len(factors), 8)
        self.assertEqual(factors[-1].g, A.g)
        self.assertEqual(fold_product(factors), A)

    def test_right_trivialization_only(self):
        a = builtin('sl2')
        with self.assertRaises(JetInputError):
            factor_pure(identity_tangent(a, 2, LEFT))
