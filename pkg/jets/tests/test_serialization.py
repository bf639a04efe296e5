import json
from fractions import Fraction

from django.test import SimpleTestCase

from jets.algebras import AlgebraElement, builtin, verify_algebra
from jets.exceptions import AlgebraDefinitionError, JetInputError
from jets.sampling import RationalSampler
from jets.serialization import (
    algebra_from_json, algebra_to_json, dumps, format_rational, group_point_from_json, jet_from_json, parse_rational,
    tangent_from_json,
)


class RationalCodecTests(SimpleTestCase):

    def test_format(self):
        self.assertEqual(format_rational(Fraction(2)), '2')
        self.assertEqual(format_rational(Fraction(-6, 4)), '-3/2')

    def test_parse(self):
        self.assertEqual(parse_rational('3/4'), Fraction(3, 4))
        self.assertEqual(parse_rational(' -1/2 '), Fraction(-1, 2))
        self.assertEqual(parse_rational(2), Fraction(2))

    def test_inexact_values_rejected(self):
        for value in (0.5, '0.5', '1e3', True, None, '1/0', 'one'):
            with self.subTest(value=value), self.assertRaises(JetInputError):
                parse_rational(value)


class DocumentTests(SimpleTestCase):

    def test_jet_document(self):
        a = builtin('sl2')
        J = RationalSampler(191).jet_element(a, 3)
        document = json.loads(dumps(J))
        self.assertEqual(document['k'], 3)
        self.assertEqual(document['side'], 'right')
        self.assertEqual(len(document['g']), 2)
        self.assertEqual(jet_from_json(a, document), J)

    def test_identity_group_point(self):
        self.assertTrue(group_point_from_json('identity').is_identity)
        self.assertTrue(group_point_from_json(None).is_identity)
        with self.assertRaises(JetInputError):
            group_point_from_json({'matrix': [[1]]})

    def test_jet_order_must_be_an_integer(self):
        a = builtin('sl2')
        with self.assertRaises(JetInputError):
            jet_from_json(a, {'k': '2', 'x': [['0', '0', '0']] * 2})

    def test_tangent_components_are_all_required(self):
        a = builtin('sl2')
        zero = ['0', '0', '0']
        with self.assertRaises(JetInputError):
            tangent_from_json(a, {'k': 2, 'components': {'1': zero, '2': zero}})
        T = tangent_from_json(a, {'k': 2, 'components': {'1': zero, '2': ['1', '0', '0'], '12': zero}})
        self.assertEqual(T.component(0b10), AlgebraElement.basis_vector(a, 0))

    def test_algebra_document(self):
        heis3 = builtin('heis3')
        document = json.loads(dumps(heis3))
        self.assertEqual(document['kind'], 'matrix')
        self.assertEqual(len(document['basis']), 3)
        rebuilt = algebra_from_json(document)
        self.assertEqual(rebuilt.constants, heis3.constants)

    def test_structure_constant_document(self):
        document = {
            'name': 'heis', 'kind': 'structure_constants', 'dim': 3,
            'brackets': [[0, 1, ['0', '0', '1']], [1, 0, ['0', '0', '-1']]],
        }
        a = algebra_from_json(document)
        self.assertTrue(verify_algebra(a).passed)
        self.assertEqual(algebra_to_json(a)['brackets'], document['brackets'])

    def test_bad_brackets(self):
        for brackets in ([[0, 1]], [[0, 1, ['1', '0']], [0, 1, ['1', '0']]], [['0', 1, ['1', '0']]]):
            with self.subTest(brackets=brackets), self.assertRaises(JetInputError):
                algebra_from_json({'dim': 2, 'brackets': brackets})
        with self.assertRaises(AlgebraDefinitionError):
            algebra_from_json({'dim': 2, 'brackets': [[0, 5, ['1', '0']]]})
