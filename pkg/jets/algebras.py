"""
Finite-dimensional Lie and left Leibniz algebras.

Elements always live in basis coordinates. A matrix-kind algebra keeps its
basis matrices for conjugation by group points and derives a structure
constant table at load time; the table is what every group law brackets
with, and ``matrix_bracket`` keeps the commutator path available so the two
can be compared.
"""
import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .exact import ONE, ZERO, RationalMatrix, mat_inverse, mat_mul, mat_vec, pivot_columns, rational
from .exceptions import AlgebraDefinitionError, JetInputError, RepresentationError, SingularMatrixError
from .reports import CheckReport

STRUCTURE_CONSTANTS = 'structure_constants'
MATRIX = 'matrix'
KIND_CHOICES = [
    (STRUCTURE_CONSTANTS, 'Structure constants'),
    (MATRIX, 'Matrix realization'),
]


@dataclass(frozen=True, eq=False)
class AlgebraSpec:
    name: str
    dim: int
    kind: str
    constants: dict
    basis: tuple = ()
    leibniz: bool = False
    pivots: tuple = field(default=(), repr=False)
    extractor: RationalMatrix = field(default=None, repr=False)

    def __post_init__(self):
        if self.dim < 1:
            raise AlgebraDefinitionError(f'Algebra {self.name!r} needs a positive dimension')
        if self.kind not in (STRUCTURE_CONSTANTS, MATRIX):
            raise AlgebraDefinitionError(f'Unknown algebra kind {self.kind!r}')
        table = {}
        for (i, j), row in self.constants.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise AlgebraDefinitionError(
                    f'Bracket index ({i}, {j}) is outside a {self.dim}-dimensional algebra'
                )
            row = tuple(rational(c) for c in row)
            if len(row) != self.dim:
                raise AlgebraDefinitionError(
                    f'Bracket [e{i + 1}, e{j + 1}] has {len(row)} coefficients, expected {self.dim}'
                )
            if any(row):
                table[i, j] = row
        object.__setattr__(self, 'constants', table)
        object.__setattr__(self, '_sparse', {
            key: tuple((m, c) for m, c in enumerate(row) if c) for key, row in table.items()
        })

    @classmethod
    def from_constants(cls, name, dim, constants, leibniz=False):
        return cls(name=name, dim=dim, kind=STRUCTURE_CONSTANTS, constants=dict(constants),
                   leibniz=leibniz)

    @classmethod
    def from_matrices(cls, name, basis, leibniz=False):
        """Realize an algebra by a matrix basis; the basis must be independent and closed."""
        basis = tuple(basis)
        if not basis:
            raise AlgebraDefinitionError(f'Algebra {name!r} needs at least one basis matrix')
        size = basis[0].rows
        if any(not b.is_square or b.rows != size for b in basis):
            raise AlgebraDefinitionError('Basis matrices must be square and of one size')

        dim = len(basis)
        # rows of the flattened basis that determine the coordinates of a span element
        stacked = RationalMatrix(dim, size * size, tuple(e for b in basis for e in b.entries))
        pivots = tuple(pivot_columns(stacked))
        if len(pivots) < dim:
            raise AlgebraDefinitionError(f'Basis of {name!r} is linearly dependent')
        square = RationalMatrix(dim, dim, tuple(basis[j].entries[p] for p in pivots for j in range(dim)))
        extractor = mat_inverse(square)

        spec = cls(name=name, dim=dim, kind=MATRIX, constants={}, basis=basis, leibniz=leibniz,
                   pivots=pivots, extractor=extractor)
        constants = {}
        for i, j in product(range(dim), repeat=2):
            commutator = mat_mul(basis[i], basis[j]) - mat_mul(basis[j], basis[i])
            try:
                constants[i, j] = spec.coordinates(commutator)
            except RepresentationError:
                raise AlgebraDefinitionError(
                    f'Basis of {name!r} is not closed under the commutator: '
                    f'[e{i + 1}, e{j + 1}] leaves the span'
                ) from None
        return cls(name=name, dim=dim, kind=MATRIX, constants=constants, basis=basis,
                   leibniz=leibniz, pivots=pivots, extractor=extractor)

    @property
    def matrix_size(self):
        return self.basis[0].rows if self.basis else None

    def compatible(self, other):
        return self is other or (
            self.name == other.name and self.dim == other.dim and self.kind == other.kind
        )

    def coordinates(self, matrix):
        """Basis coordinates of a matrix in the span of the basis."""
        if self.kind != MATRIX:
            raise JetInputError(f'Algebra {self.name!r} has no matrix realization')
        if (matrix.rows, matrix.cols) != (self.matrix_size, self.matrix_size):
            raise RepresentationError(
                f'A {matrix.rows}x{matrix.cols} matrix is not in {self.name!r}'
            )
        coords = mat_vec(self.extractor, [matrix.entries[p] for p in self.pivots])
        if self.matrix_of(coords) != matrix:
            raise RepresentationError(f'Matrix {matrix} is not in the span of the {self.name!r} basis')
        return coords

    def matrix_of(self, coords):
        if self.kind != MATRIX:
            raise JetInputError(f'Algebra {self.name!r} has no matrix realization')
        size = self.matrix_size
        entries = [ZERO] * (size * size)
        for c, b in zip(coords, self.basis):
            if c:
                for index, e in enumerate(b.entries):
                    if e:
                        entries[index] += c * e
        return RationalMatrix(size, size, tuple(entries))

    def bracket_coords(self, xs, ys):
        out = [ZERO] * self.dim
        sparse = self._sparse
        for i, a in enumerate(xs):
            if not a:
                continue
            for j, b in enumerate(ys):
                if not b:
                    continue
                row = sparse.get((i, j))
                if row:
                    ab = a * b
                    for m, c in row:
                        out[m] += ab * c
        return tuple(out)

    def __str__(self):
        return self.name


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    algebra: AlgebraSpec
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(rational(c) for c in self.coeffs)
        if len(coeffs) != self.algebra.dim:
            raise JetInputError(
                f'{self.algebra.name} elements have {self.algebra.dim} coordinates, got {len(coeffs)}'
            )
        object.__setattr__(self, 'coeffs', coeffs)

    @classmethod
    def zero(cls, algebra):
        return cls(algebra, (ZERO,) * algebra.dim)

    @classmethod
    def basis_vector(cls, algebra, index):
        return cls(algebra, tuple(ONE if i == index else ZERO for i in range(algebra.dim)))

    @property
    def is_zero(self):
        return not any(self.coeffs)

    @property
    def matrix(self):
        return self.algebra.matrix_of(self.coeffs)

    def _check(self, other):
        if not isinstance(other, AlgebraElement) or not self.algebra.compatible(other.algebra):
            raise JetInputError(f'Cannot combine elements of {self.algebra} and {getattr(other, "algebra", other)}')

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-a for a in self.coeffs))

    def scale(self, factor):
        factor = rational(factor)
        return AlgebraElement(self.algebra, tuple(factor * a for a in self.coeffs))

    def __rmul__(self, factor):
        return self.scale(factor)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra.compatible(other.algebra) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.algebra.name, self.coeffs))

    def __str__(self):
        return '(%s)' % ', '.join(str(c) for c in self.coeffs)

    __repr__ = __str__


IDENTITY = 'identity'
MATRIX_POINT = 'matrix'
AUTOMORPHISM = 'automorphism'


@dataclass(frozen=True, eq=False)
class GroupPoint:
    """A group element: the identity marker, a matrix g, or an automorphism Ad_g of an abstract algebra."""
    kind: str
    matrix: RationalMatrix = None

    def __post_init__(self):
        if self.kind == IDENTITY:
            return
        if self.kind not in (MATRIX_POINT, AUTOMORPHISM):
            raise JetInputError(f'Unknown group point kind {self.kind!r}')
        if self.matrix is None or not self.matrix.is_square:
            raise JetInputError('A group point needs a square matrix')

    @classmethod
    def identity(cls):
        return cls(IDENTITY)

    @classmethod
    def of_matrix(cls, matrix):
        return cls(MATRIX_POINT, matrix)

    @classmethod
    def automorphism(cls, matrix):
        return cls(AUTOMORPHISM, matrix)

    @property
    def is_identity(self):
        return self.kind == IDENTITY or self.matrix == RationalMatrix.identity(self.matrix.rows)

    def inverse(self):
        if self.kind == IDENTITY:
            return self
        return GroupPoint(self.kind, mat_inverse(self.matrix))

    def compose(self, other):
        """The product ``self * other``."""
        if self.kind == IDENTITY:
            return other
        if other.kind == IDENTITY:
            return self
        if self.kind != other.kind:
            raise JetInputError(f'Cannot multiply a {self.kind} group point by a {other.kind} one')
        return GroupPoint(self.kind, mat_mul(self.matrix, other.matrix))

    def __eq__(self, other):
        if not isinstance(other, GroupPoint):
            return NotImplemented
        if self.is_identity or other.is_identity:
            return self.is_identity and other.is_identity
        return self.kind == other.kind and self.matrix == other.matrix

    def __hash__(self):
        return hash(IDENTITY) if self.is_identity else hash((self.kind, self.matrix))

    def __str__(self):
        return IDENTITY if self.kind == IDENTITY else f'{self.kind} {self.matrix}'


def _same_algebra(a, x):
    if not a.compatible(x.algebra):
        raise JetInputError(f'Element of {x.algebra} used with algebra {a}')


def bracket(a, x, y):
    """[x, y] via the structure constants (derived from commutators for matrix algebras)."""
    _same_algebra(a, x)
    _same_algebra(a, y)
    return AlgebraElement(a, a.bracket_coords(x.coeffs, y.coeffs))


def matrix_bracket(a, x, y):
    """[x, y] as the commutator XY - YX, read back in basis coordinates."""
    _same_algebra(a, x)
    _same_algebra(a, y)
    if a.kind != MATRIX:
        raise JetInputError(f'Algebra {a} has no matrix realization')
    X, Y = x.matrix, y.matrix
    return AlgebraElement(a, a.coordinates(mat_mul(X, Y) - mat_mul(Y, X)))


def ad(a, x):
    """The left bracketing y -> [x, y]."""
    return lambda y: bracket(a, x, y)


def structure_constants(a):
    return dict(a.constants)


def validate_group_point(a, g):
    """Reject group points whose adjoint action is undefined on ``a``."""
    if g.kind == IDENTITY:
        return g
    if a.leibniz:
        raise JetInputError(f'{a} is a Leibniz algebra: only the identity group point is available')
    if a.kind == MATRIX:
        if g.kind != MATRIX_POINT:
            raise JetInputError(f'{a} is realized by matrices: expected a matrix group point')
        if g.matrix.rows != a.matrix_size:
            raise JetInputError(
                f'{a} needs {a.matrix_size}x{a.matrix_size} group matrices, got {g.matrix.rows}x{g.matrix.cols}'
            )
    else:
        if g.kind != AUTOMORPHISM:
            raise JetInputError(f'{a} is abstract: a group point must be given as an automorphism')
        if g.matrix.rows != a.dim:
            raise JetInputError(f'{a} automorphisms are {a.dim}x{a.dim} matrices')
    # raises on singular g, or when Ad_g leaves the algebra
    matrix = adjoint_matrix(a, g)
    if g.kind == AUTOMORPHISM:
        _check_automorphism(a, matrix)
    return g


def _check_automorphism(a, matrix):
    images = [mat_vec(matrix, AlgebraElement.basis_vector(a, i).coeffs) for i in range(a.dim)]
    for i, j in product(range(a.dim), repeat=2):
        left = mat_vec(matrix, a.bracket_coords(
            AlgebraElement.basis_vector(a, i).coeffs, AlgebraElement.basis_vector(a, j).coeffs))
        right = a.bracket_coords(images[i], images[j])
        if left != right:
            raise JetInputError(
                f'Matrix does not preserve the bracket of {a}: fails on [e{i + 1}, e{j + 1}]'
            )


@lru_cache(maxsize=512)
def adjoint_matrix(a, g):
    """The matrix of Ad_g in basis coordinates, or None for the identity."""
    if g.is_identity:
        return None
    if g.kind == AUTOMORPHISM:
        if a.kind == MATRIX:
            raise JetInputError(f'{a} is realized by matrices: expected a matrix group point')
        mat_inverse(g.matrix)
        return g.matrix
    if a.kind != MATRIX:
        raise JetInputError(f'Abstract algebra {a} cannot be conjugated by a matrix group point')
    inverse = mat_inverse(g.matrix)
    columns = [a.coordinates(mat_mul(mat_mul(g.matrix, b), inverse)) for b in a.basis]
    return RationalMatrix(a.dim, a.dim, tuple(columns[j][i] for i in range(a.dim) for j in range(a.dim)))


def apply_adjoint(matrix, x):
    if matrix is None:
        return x
    return AlgebraElement(x.algebra, mat_vec(matrix, x.coeffs))


def adjoint(g, x):
    """Ad_g x."""
    return apply_adjoint(adjoint_matrix(x.algebra, g), x)


def verify_algebra(a):
    """Exhaustive basis-triple check of antisymmetry + Jacobi, or of the left Leibniz identity."""
    name = f'algebra axioms ({a})'
    e = [AlgebraElement.basis_vector(a, i) for i in range(a.dim)]

    def br(x, y):
        return bracket(a, x, y)

    checked = 0
    if not a.leibniz:
        for i, j in product(range(a.dim), repeat=2):
            checked += 1
            if br(e[i], e[j]) != -br(e[j], e[i]):
                return CheckReport(name, False, checked,
                                   f'antisymmetry fails: [e{i + 1}, e{j + 1}] != -[e{j + 1}, e{i + 1}]')
        for i, j, k in product(range(a.dim), repeat=3):
            checked += 1
            jacobi = br(e[i], br(e[j], e[k])) + br(e[j], br(e[k], e[i])) + br(e[k], br(e[i], e[j]))
            if not jacobi.is_zero:
                return CheckReport(name, False, checked,
                                   f'Jacobi identity fails on (e{i + 1}, e{j + 1}, e{k + 1})')
    else:
        for i, j, k in product(range(a.dim), repeat=3):
            checked += 1
            left = br(e[i], br(e[j], e[k]))
            right = br(br(e[i], e[j]), e[k]) + br(e[j], br(e[i], e[k]))
            if left != right:
                return CheckReport(name, False, checked,
                                   f'left Leibniz identity fails on (e{i + 1}, e{j + 1}, e{k + 1})')
    return CheckReport(name, True, checked)


def _unit(size, i, j, value=ONE):
    entries = [ZERO] * (size * size)
    entries[i * size + j] = value
    return RationalMatrix(size, size, tuple(entries))


def _abelian(n):
    return AlgebraSpec.from_constants(f'abelian({n})', n, {})


def _nilpotent_upper(n):
    if n < 2:
        raise JetInputError('nilpotent_upper(n) needs n >= 2')
    basis = [_unit(n, i, j) for i in range(n) for j in range(i + 1, n)]
    return AlgebraSpec.from_matrices(f'nilpotent_upper({n})', basis)


def _heis3():
    return AlgebraSpec.from_matrices('heis3', [_unit(3, 0, 1), _unit(3, 1, 2), _unit(3, 0, 2)])


def _sl2():
    e = _unit(2, 0, 1)
    f = _unit(2, 1, 0)
    h = RationalMatrix.from_rows([[1, 0], [0, -1]])
    return AlgebraSpec.from_matrices('sl2', [e, f, h])


def _so3():
    l1 = RationalMatrix.from_rows([[0, 0, 0], [0, 0, -1], [0, 1, 0]])
    l2 = RationalMatrix.from_rows([[0, 0, 1], [0, 0, 0], [-1, 0, 0]])
    l3 = RationalMatrix.from_rows([[0, -1, 0], [1, 0, 0], [0, 0, 0]])
    return AlgebraSpec.from_matrices('so3', [l1, l2, l3])


def _leibniz2():
    return AlgebraSpec.from_constants('leibniz2', 2, {(0, 0): (0, 1)}, leibniz=True)


BUILTINS = {
    'heis3': _heis3,
    'sl2': _sl2,
    'so3': _so3,
    'leibniz2': _leibniz2,
}
PARAMETRIZED = {
    'abelian': _abelian,
    'nilpotent_upper': _nilpotent_upper,
}
BUILTIN_PATTERN = re.compile(r'^(?P<family>[a-z_]+)\((?P<size>\d+)\)$')


def is_builtin_name(name):
    match = BUILTIN_PATTERN.match(name)
    return name in BUILTINS or bool(match and match['family'] in PARAMETRIZED)


@lru_cache(maxsize=None)
def builtin(name):
    """One of abelian(n), heis3, sl2, so3, nilpotent_upper(n), leibniz2."""
    name = name.strip()
    if name in BUILTINS:
        return BUILTINS[name]()
    match = BUILTIN_PATTERN.match(name)
    if match and match['family'] in PARAMETRIZED:
        size = int(match['size'])
        if size < 1:
            raise JetInputError(f'{name}: size must be positive')
        return PARAMETRIZED[match['family']](size)
    raise JetInputError(f'Unknown builtin algebra {name!r}')
