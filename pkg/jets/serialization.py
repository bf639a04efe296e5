"""
JSON codecs. Rationals travel as "p/q" strings ("p" when q = 1); integer
JSON numbers are accepted on input, floats never are.
"""
import json
from fractions import Fraction

from django.core.serializers.json import DjangoJSONEncoder

from .algebras import (
    AUTOMORPHISM, IDENTITY, MATRIX, STRUCTURE_CONSTANTS, AlgebraElement, AlgebraSpec, GroupPoint,
)
from .exact import RationalMatrix
from .exceptions import JetInputError
from .jet_group import RIGHT, SIDES, JetAlgebraElement, JetElement
from .partitions import Partition
from .reports import CheckReport
from .tangent_group import TangentElement, all_masks, mask_label, parse_mask


def format_rational(q):
    return str(q.numerator) if q.denominator == 1 else f'{q.numerator}/{q.denominator}'


def parse_rational(value):
    if isinstance(value, bool):
        raise JetInputError(f'Expected a rational, got {value!r}')
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if '.' in text or 'e' in text.lower():
            raise JetInputError(f'Rationals must be written as "p/q", got {value!r}')
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise JetInputError(f'Malformed rational {value!r}') from None
    raise JetInputError(f'Expected a "p/q" string, got {value!r}')


def matrix_to_json(m):
    return [[format_rational(e) for e in m.row(i)] for i in range(m.rows)]


def matrix_from_json(data):
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        raise JetInputError('A matrix must be a list of rows')
    return RationalMatrix.from_rows([[parse_rational(e) for e in row] for row in data])


def element_to_json(x):
    return [format_rational(c) for c in x.coeffs]


def element_from_json(a, data):
    if not isinstance(data, list):
        raise JetInputError(f'An algebra element must be a list of {a.dim} rationals')
    return AlgebraElement(a, tuple(parse_rational(c) for c in data))


def group_point_to_json(g):
    if g.kind == IDENTITY:
        return IDENTITY
    if g.kind == AUTOMORPHISM:
        return {AUTOMORPHISM: matrix_to_json(g.matrix)}
    return matrix_to_json(g.matrix)


def group_point_from_json(data):
    if data is None or data == IDENTITY:
        return GroupPoint.identity()
    if isinstance(data, dict):
        if set(data) != {AUTOMORPHISM}:
            raise JetInputError('A group point object must have the single key "automorphism"')
        return GroupPoint.automorphism(matrix_from_json(data[AUTOMORPHISM]))
    if isinstance(data, list):
        return GroupPoint.of_matrix(matrix_from_json(data))
    raise JetInputError(f'Unreadable group point {data!r}')


def _side(data):
    side = data.get('side', RIGHT)
    if side not in SIDES:
        raise JetInputError(f'Unknown trivialization side {side!r}')
    return side


def _integer(data, key='k'):
    value = data.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise JetInputError(f'"{key}" must be an integer, got {value!r}')
    return value


def jet_to_json(J):
    return {
        'k': J.k,
        'side': J.side,
        'g': group_point_to_json(J.g),
        'x': [element_to_json(c) for c in J.x],
    }


def jet_from_json(a, data):
    fiber = data.get('x')
    if not isinstance(fiber, list):
        raise JetInputError('"x" must list the fiber components')
    return JetElement(
        _integer(data), group_point_from_json(data.get('g')),
        tuple(element_from_json(a, c) for c in fiber), _side(data),
    )


def tangent_to_json(T):
    return {
        'k': T.k,
        'side': T.side,
        'g': group_point_to_json(T.g),
        'components': {mask_label(m): element_to_json(c) for m, c in T.items()},
    }


def tangent_from_json(a, data):
    k = _integer(data)
    components = data.get('components')
    if not isinstance(components, dict):
        raise JetInputError('"components" must map multi-indices such as "12" to elements')
    mapping = {parse_mask(label, k): element_from_json(a, c) for label, c in components.items()}
    missing = [mask_label(m) for m in all_masks(k) if m not in mapping]
    if missing:
        raise JetInputError(f'Missing components {", ".join(missing)}')
    return TangentElement.from_mapping(k, group_point_from_json(data.get('g')), mapping, _side(data), algebra=a)


def jet_algebra_to_json(A):
    return {'k': A.k, 'xi': element_to_json(A.xi), 'x': [element_to_json(c) for c in A.x]}


def jet_algebra_from_json(a, data):
    fiber = data.get('x')
    if not isinstance(fiber, list):
        raise JetInputError('"x" must list the components x_1, ..., x_k')
    return JetAlgebraElement(
        _integer(data), element_from_json(a, data.get('xi')), tuple(element_from_json(a, c) for c in fiber),
    )


def algebra_to_json(a):
    payload = {'name': a.name, 'kind': a.kind, 'dim': a.dim, 'leibniz': a.leibniz}
    if a.kind == MATRIX:
        payload['basis'] = [matrix_to_json(b) for b in a.basis]
    else:
        payload['brackets'] = [
            [i, j, [format_rational(c) for c in row]] for (i, j), row in sorted(a.constants.items())
        ]
    return payload


def algebra_from_json(data):
    """An ``AlgebraSpec`` from an algebra file; axioms are left to ``verify_algebra``."""
    name = data.get('name') or 'unnamed'
    kind = data.get('kind', STRUCTURE_CONSTANTS)
    leibniz = bool(data.get('leibniz', False))
    if kind == MATRIX:
        basis = [matrix_from_json(b) for b in data.get('basis') or []]
        spec = AlgebraSpec.from_matrices(name, basis, leibniz=leibniz)
        if data.get('dim') is not None and data['dim'] != spec.dim:
            raise JetInputError(f'"dim" is {data["dim"]} but the basis has {spec.dim} matrices')
        return spec
    if kind != STRUCTURE_CONSTANTS:
        raise JetInputError(f'Unknown algebra kind {kind!r}')
    constants = {}
    for entry in data.get('brackets') or []:
        if not (isinstance(entry, list) and len(entry) == 3):
            raise JetInputError(f'Bracket entries are [i, j, [coefficients]], got {entry!r}')
        i, j, row = entry
        if not all(isinstance(n, int) and not isinstance(n, bool) for n in (i, j)) or not isinstance(row, list):
            raise JetInputError(f'Bracket entries are [i, j, [coefficients]] with 0-based integer i, j, got {entry!r}')
        if (i, j) in constants:
            raise JetInputError(f'Bracket [e{i + 1}, e{j + 1}] is given twice')
        constants[i, j] = tuple(parse_rational(c) for c in row)
    return AlgebraSpec.from_constants(name, _integer(data, 'dim'), constants, leibniz=leibniz)


class JetJSONEncoder(DjangoJSONEncoder):
    """Knows every value type of the jets library."""

    def default(self, o):
        if isinstance(o, Fraction):
            return format_rational(o)
        if isinstance(o, AlgebraElement):
            return element_to_json(o)
        if isinstance(o, RationalMatrix):
            return matrix_to_json(o)
        if isinstance(o, GroupPoint):
            return group_point_to_json(o)
        if isinstance(o, JetElement):
            return jet_to_json(o)
        if isinstance(o, TangentElement):
            return tangent_to_json(o)
        if isinstance(o, JetAlgebraElement):
            return jet_algebra_to_json(o)
        if isinstance(o, AlgebraSpec):
            return algebra_to_json(o)
        if isinstance(o, Partition):
            return str(o)
        if isinstance(o, CheckReport):
            return o.as_dict()
        return super().default(o)


def dumps(payload):
    return json.dumps(payload, cls=JetJSONEncoder, indent=2)
