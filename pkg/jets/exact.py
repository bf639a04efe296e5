"""
Exact scalars, dense rational matrices and the combinatorial numbers the
group laws are weighted with.

Scalars are :class:`fractions.Fraction` values (always in lowest terms with
a positive denominator). Matrices are immutable and row-major; inversion is
Gauss-Jordan elimination that pivots on the first nonzero entry, so there
is no floating point anywhere.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import conf
from .exceptions import JetInputError, SingularMatrixError

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rational(value):
    """Coerce an int or Fraction to a Fraction, refusing floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise JetInputError(f'Expected an exact rational, got {value!r}')
    return Fraction(value)


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise JetInputError('Matrix dimensions must be positive')
        entries = tuple(rational(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise JetInputError(
                f'Expected {self.rows * self.cols} entries for a '
                f'{self.rows}x{self.cols} matrix, got {len(entries)}'
            )
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def from_rows(cls, rows):
        rows = [list(row) for row in rows]
        if not rows or not rows[0]:
            raise JetInputError('A matrix needs at least one row and one column')
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise JetInputError('Matrix rows have different lengths')
        return cls(len(rows), width, tuple(e for row in rows for e in row))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @property
    def is_square(self):
        return self.rows == self.cols

    @property
    def is_zero(self):
        return not any(self.entries)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return RationalMatrix(
            self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __add__(self, other):
        return mat_add(self, other)

    def __sub__(self, other):
        return mat_sub(self, other)

    def __neg__(self):
        return RationalMatrix(self.rows, self.cols, tuple(-e for e in self.entries))

    def __matmul__(self, other):
        return mat_mul(self, other)

    def scale(self, factor):
        factor = rational(factor)
        return RationalMatrix(self.rows, self.cols, tuple(factor * e for e in self.entries))

    def __str__(self):
        return '[%s]' % ', '.join(
            '[%s]' % ', '.join(str(e) for e in self.row(i)) for i in range(self.rows)
        )


def _same_shape(a, b):
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise JetInputError(
            f'Cannot combine a {a.rows}x{a.cols} matrix with a {b.rows}x{b.cols} matrix'
        )


def mat_add(a, b):
    _same_shape(a, b)
    return RationalMatrix(a.rows, a.cols, tuple(x + y for x, y in zip(a.entries, b.entries)))


def mat_sub(a, b):
    _same_shape(a, b)
    return RationalMatrix(a.rows, a.cols, tuple(x - y for x, y in zip(a.entries, b.entries)))


def mat_mul(a, b):
    """Exact product ``a @ b``."""
    if a.cols != b.rows:
        raise JetInputError(
            f'Cannot multiply a {a.rows}x{a.cols} matrix by a {b.rows}x{b.cols} matrix'
        )
    b_columns = [b.entries[j::b.cols] for j in range(b.cols)]
    entries = []
    for i in range(a.rows):
        row = a.row(i)
        for column in b_columns:
            total = ZERO
            for x, y in zip(row, column):
                if x and y:
                    total += x * y
            entries.append(total)
    return RationalMatrix(a.rows, b.cols, tuple(entries))


def mat_inverse(a):
    """Gauss-Jordan inverse; raises :class:`SingularMatrixError` when none exists."""
    if not a.is_square:
        raise JetInputError(f'Only square matrices can be inverted, got {a.rows}x{a.cols}')
    n = a.rows
    m = [list(a.row(i)) for i in range(n)]
    b = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]

    for i in range(n):
        # first nonzero pivot
        for k in range(i, n):
            if m[k][i] != 0:
                break
        else:
            raise SingularMatrixError(f'Matrix is singular: {a}')

        if k != i:
            m[i], m[k] = m[k], m[i]
            b[i], b[k] = b[k], b[i]

        inv = ONE / m[i][i]
        m[i] = [e * inv for e in m[i]]
        b[i] = [e * inv for e in b[i]]

        for j in range(n):
            if j == i or m[j][i] == 0:
                continue
            d = m[j][i]
            m[j] = [t - r * d for t, r in zip(m[j], m[i])]
            b[j] = [t - r * d for t, r in zip(b[j], b[i])]

    return RationalMatrix(n, n, tuple(e for row in b for e in row))


def pivot_columns(a):
    """Indices of the pivot columns of the reduced row echelon form of ``a``."""
    m = [list(a.row(i)) for i in range(a.rows)]
    pivots = []
    r = 0
    for c in range(a.cols):
        if r == a.rows:
            break
        for k in range(r, a.rows):
            if m[k][c] != 0:
                break
        else:
            continue
        m[r], m[k] = m[k], m[r]
        inv = ONE / m[r][c]
        m[r] = [e * inv for e in m[r]]
        for j in range(a.rows):
            if j != r and m[j][c] != 0:
                d = m[j][c]
                m[j] = [t - s * d for t, s in zip(m[j], m[r])]
        pivots.append(c)
        r += 1
    return pivots


def mat_vec(a, vector):
    if a.cols != len(vector):
        raise JetInputError(f'Cannot apply a {a.rows}x{a.cols} matrix to a vector of length {len(vector)}')
    return tuple(
        sum((x * y for x, y in zip(a.row(i), vector) if x and y), ZERO)
        for i in range(a.rows)
    )


def binomial(n, k):
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if n < 0:
        raise JetInputError(f'binomial() needs n >= 0, got {n}')
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def _bell(n):
    if n == 0:
        return 1
    return sum(binomial(n - 1, k) * _bell(k) for k in range(n))


def bell_number(n, bound=None):
    """Bell number B_n from B_{n+1} = sum_k C(n, k) B_k."""
    bound = conf.max_bell_index() if bound is None else bound
    if n < 0 or n > bound:
        raise JetInputError(f'bell_number() supports 0 <= n <= {bound}, got {n}')
    return _bell(n)

