"""
Truncated Taylor arithmetic for matrix-valued curves.

A ``MatrixJet`` of order k stores A_n = A^(n)(0) for n = 0..k, so the curve
is A(t) = sum t^n/n! A_n mod t^(k+1) and every product rule is a binomial
convolution. This module never touches partitions: it is the independent
ground truth the jet group formulas are compared against.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebras import MATRIX, AlgebraElement, GroupPoint
from .exact import RationalMatrix, binomial, mat_inverse, mat_mul
from .exceptions import JetInputError
from .jet_group import LEFT, RIGHT, SIDES, JetElement


@dataclass(frozen=True)
class MatrixJet:
    k: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if self.k < 0:
            raise JetInputError(f'Jet order must be non-negative, got {self.k}')
        if len(coeffs) != self.k + 1:
            raise JetInputError(f'A matrix jet of order {self.k} has {self.k + 1} coefficients, got {len(coeffs)}')
        shape = (coeffs[0].rows, coeffs[0].cols)
        if any((c.rows, c.cols) != shape for c in coeffs):
            raise JetInputError('All coefficients of a matrix jet must have one shape')
        object.__setattr__(self, 'coeffs', coeffs)

    @property
    def shape(self):
        return self.coeffs[0].rows, self.coeffs[0].cols

    def __getitem__(self, n):
        return self.coeffs[n]


def _check_orders(A, B):
    if A.k != B.k:
        raise JetInputError(f'Cannot combine matrix jets of orders {A.k} and {B.k}; truncate first')


def truncate(A, k):
    if not 0 <= k <= A.k:
        raise JetInputError(f'Cannot truncate a jet of order {A.k} to order {k}')
    return MatrixJet(k, A.coeffs[:k + 1])


def constant_jet(matrix, k):
    zero = RationalMatrix.zeros(matrix.rows, matrix.cols)
    return MatrixJet(k, (matrix,) + (zero,) * k)


def identity_jet(size, k):
    return constant_jet(RationalMatrix.identity(size), k)


def mjet_add(A, B):
    _check_orders(A, B)
    return MatrixJet(A.k, tuple(a + b for a, b in zip(A.coeffs, B.coeffs)))


def mjet_scale(A, factor):
    return MatrixJet(A.k, tuple(c.scale(factor) for c in A.coeffs))


def mjet_mul(A, B):
    """(AB)_n = sum_i C(n, i) A_i B_(n-i)."""
    _check_orders(A, B)
    if A.shape[1] != B.shape[0]:
        raise JetInputError(f'Cannot multiply {A.shape} jets by {B.shape} jets')
    out = []
    for n in range(A.k + 1):
        total = RationalMatrix.zeros(A.shape[0], B.shape[1])
        for i in range(n + 1):
            if A[i].is_zero or B[n - i].is_zero:
                continue
            total = total + mat_mul(A[i], B[n - i]).scale(binomial(n, i))
        out.append(total)
    return MatrixJet(A.k, tuple(out))


def mjet_inverse(A):
    """B_0 = A_0^-1, B_n = -A_0^-1 sum_(i>=1) C(n, i) A_i B_(n-i)."""
    inverse = mat_inverse(A[0])
    out = [inverse]
    for n in range(1, A.k + 1):
        total = RationalMatrix.zeros(*A.shape)
        for i in range(1, n + 1):
            if not A[i].is_zero:
                total = total + mat_mul(A[i], out[n - i]).scale(binomial(n, i))
        out.append(-mat_mul(inverse, total))
    return MatrixJet(A.k, tuple(out))


def derivative(A):
    if A.k < 1:
        raise JetInputError('A jet of order 0 has no derivative')
    return MatrixJet(A.k - 1, A.coeffs[1:])


def log_derivative(A, side=RIGHT):
    """c' c^-1 (right) or c^-1 c' (left), as a jet of order k - 1."""
    if side not in SIDES:
        raise JetInputError(f'Unknown trivialization side {side!r}')
    inverse = truncate(mjet_inverse(A), A.k - 1)
    if side == RIGHT:
        return mjet_mul(derivative(A), inverse)
    return mjet_mul(inverse, derivative(A))


def _require_matrix_algebra(a):
    if a.kind != MATRIX:
        raise JetInputError(f'The Taylor model needs a matrix algebra, {a} is abstract')


def curve_jet(a, xs):
    """The jet of x(t) = sum t^n/n! x_n (no constant term), of order len(xs)."""
    _require_matrix_algebra(a)
    size = a.matrix_size
    return MatrixJet(len(xs), (RationalMatrix.zeros(size),) + tuple(x.matrix for x in xs))


def trivialize(A, a, side=RIGHT):
    """(c(0), d(0), d'(0), ..., d^(k-1)(0)) for the logarithmic derivative d."""
    _require_matrix_algebra(a)
    d = log_derivative(A, side)
    x = tuple(AlgebraElement(a, a.coordinates(c)) for c in d.coeffs)
    return JetElement(A.k, GroupPoint.of_matrix(A[0]), x, side)


def _group_matrix(J):
    a = J.algebra
    _require_matrix_algebra(a)
    if J.g.is_identity:
        return RationalMatrix.identity(a.matrix_size)
    return J.g.matrix


def from_trivialization(J):
    """
    Solve c(0) = g, c' = x'(t) c (right) or c' = c x'(t) (left) as formal
    series: C_(n+1) = sum_i C(n, i) X_(i+1) C_(n-i), mirrored on the left.
    """
    C = [_group_matrix(J)]
    X = [c.matrix for c in J.x]
    for n in range(J.k):
        total = RationalMatrix.zeros(C[0].rows, C[0].cols)
        for i in range(n + 1):
            if J.side == RIGHT:
                term = mat_mul(X[i], C[n - i])
            else:
                term = mat_mul(C[n - i], X[i])
            total = total + term.scale(binomial(n, i))
        C.append(total)
    return MatrixJet(J.k, tuple(C))


def exp_jet(X):
    """sum_(m <= k) X^m / m!; exact because X^m vanishes to order m."""
    if not X[0].is_zero:
        raise JetInputError('exp_jet needs a jet with zero constant term')
    size = X.shape[0]
    total = identity_jet(size, X.k)
    power = identity_jet(size, X.k)
    for m in range(1, X.k + 1):
        power = mjet_mul(power, X)
        total = mjet_add(total, mjet_scale(power, Fraction(1, factorial(m))))
    return total


def oracle_multiply(A, B):
    """j^k(cb) for curves c, b representing A and B."""
    if A.side != B.side:
        raise JetInputError('Both jets must use the same trivialization')
    product = mjet_mul(from_trivialization(A), from_trivialization(B))
    return trivialize(product, A.algebra, A.side)


def oracle_inverse(A):
    return trivialize(mjet_inverse(from_trivialization(A)), A.algebra, A.side)


def convert_side(J):
    """The same jet read in the other trivialization."""
    other = LEFT if J.side == RIGHT else RIGHT
    return trivialize(from_trivialization(J), J.algebra, other)
