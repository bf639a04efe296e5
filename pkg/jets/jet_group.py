"""
The jet group J^kG in right or left trivialization.

An element is a group point g together with k algebra elements
(x_1, ..., x_k). Every fiber component of a product or inverse is a sum,
over the anti-lexicographically ordered partitions of {1, ..., n}, of nested
brackets whose shape only depends on the block sizes. Two evaluations of
that sum are available:

``compositions``
    Groups the partitions by block sizes, i.e. by compositions
    (i_1, ..., i_l) of n weighted by their count N_(i_1, ..., i_l), and
    factors the weights as a product of binomials so each nested bracket is
    built once. This is the default.
``partitions``
    Walks P_n and evaluates every partition's bracket chain on its own.
"""
import logging
from dataclasses import dataclass

from .algebras import AlgebraElement, GroupPoint, adjoint_matrix, validate_group_point
from .exact import ZERO, RationalMatrix, binomial, mat_mul, mat_vec
from .exceptions import JetInputError
from .partitions import enumerate_partitions

logger = logging.getLogger(__name__)

RIGHT = 'right'
LEFT = 'left'
SIDES = (RIGHT, LEFT)

COMPOSITIONS = 'compositions'
PARTITIONS = 'partitions'
STRATEGIES = (COMPOSITIONS, PARTITIONS)


@dataclass(frozen=True)
class JetElement:
    k: int
    g: GroupPoint
    x: tuple
    side: str = RIGHT

    def __post_init__(self):
        x = tuple(self.x)
        if self.k < 1:
            raise JetInputError(f'Jet order must be at least 1, got {self.k}')
        if len(x) != self.k:
            raise JetInputError(f'A {self.k}-jet needs {self.k} fiber components, got {len(x)}')
        if self.side not in SIDES:
            raise JetInputError(f'Unknown trivialization side {self.side!r}')
        algebra = x[0].algebra
        if any(not algebra.compatible(c.algebra) for c in x):
            raise JetInputError('All fiber components of a jet must lie in one algebra')
        validate_group_point(algebra, self.g)
        object.__setattr__(self, 'x', x)

    @property
    def algebra(self):
        return self.x[0].algebra

    @property
    def is_identity(self):
        return self.g.is_identity and all(c.is_zero for c in self.x)

    def truncate(self, k):
        """The image in J^k for k <= self.k."""
        if not 1 <= k <= self.k:
            raise JetInputError(f'Cannot truncate a {self.k}-jet to order {k}')
        return JetElement(k, self.g, self.x[:k], self.side)

    def __str__(self):
        return '(%s; %s)' % (self.g, ', '.join(str(c) for c in self.x))


@dataclass(frozen=True)
class JetAlgebraElement:
    """(xi, x_1, ..., x_k) in the Lie algebra of J^kG, i.e. xi + sum t^n/n! x_n."""
    k: int
    xi: AlgebraElement
    x: tuple

    def __post_init__(self):
        x = tuple(self.x)
        if self.k < 1:
            raise JetInputError(f'Jet order must be at least 1, got {self.k}')
        if len(x) != self.k:
            raise JetInputError(f'An element of order {self.k} needs {self.k} components besides xi, got {len(x)}')
        if any(not self.xi.algebra.compatible(c.algebra) for c in x):
            raise JetInputError('All components must lie in one algebra')
        object.__setattr__(self, 'x', x)

    @property
    def algebra(self):
        return self.xi.algebra

    @property
    def components(self):
        return (self.xi,) + self.x

    def __str__(self):
        return '(%s)' % ', '.join(str(c) for c in self.components)


def identity_jet(a, k, side=RIGHT):
    return JetElement(k, GroupPoint.identity(), (AlgebraElement.zero(a),) * k, side)


def pure_jet(a, k, index, x, side=RIGHT, g=None):
    """(g, 0, ..., x, ..., 0) with x in slot ``index``."""
    if not 1 <= index <= k:
        raise JetInputError(f'Pure component index {index} is outside 1..{k}')
    zero = AlgebraElement.zero(a)
    fiber = tuple(x if n == index else zero for n in range(1, k + 1))
    return JetElement(k, g or GroupPoint.identity(), fiber, side)


def lift_jet(A, top=None):
    """An element of J^{k+1} over ``A``, with top component ``top`` (zero by default)."""
    top = AlgebraElement.zero(A.algebra) if top is None else top
    return JetElement(A.k + 1, A.g, A.x + (top,), A.side)


def _check_pair(A, B):
    if A.k != B.k:
        raise JetInputError(f'Cannot multiply a {A.k}-jet by a {B.k}-jet')
    if A.side != B.side:
        raise JetInputError(f'Cannot multiply a {A.side}-trivialized jet by a {B.side}-trivialized one')
    if not A.algebra.compatible(B.algebra):
        raise JetInputError(f'Jets over {A.algebra} and {B.algebra} cannot be multiplied')


def _check_strategy(strategy):
    if strategy not in STRATEGIES:
        raise JetInputError(f'Unknown summation strategy {strategy!r}; choose from {", ".join(STRATEGIES)}')


def _add_scaled(acc, factor, v):
    for m, c in enumerate(v):
        if c:
            acc[m] += factor * c


def _apply(matrix, v):
    return v if matrix is None else mat_vec(matrix, v)


def grouped_chain_sums(a, xs, bases, k, sign=1, min_length=1):
    """
    For n = 1..k, the sum over compositions (i_1, ..., i_l) of n with
    l >= ``min_length`` of

        sign^(l-1) N_(i_1, ..., i_l) ad_{x_{i_(l-1)}} ... ad_{x_{i_1}} bases[i_l]

    (ad_{x_{i_1}} innermost). Coordinates in, coordinates out.
    """
    dim = a.dim
    # chains[j][m]: all brackets applied to bases[j] whose ad indices sum to m
    chains = {}
    for j in range(1, k + 1):
        column = [bases[j - 1]]
        for m in range(1, k - j + 1):
            acc = [ZERO] * dim
            for i in range(1, m + 1):
                inner = column[m - i]
                if any(inner):
                    _add_scaled(acc, sign * binomial(m - 1, i - 1), a.bracket_coords(xs[i - 1], inner))
            column.append(tuple(acc))
        chains[j] = column

    sums = []
    for n in range(1, k + 1):
        acc = [ZERO] * dim
        for j in range(1, n + 1):
            if j == n and min_length > 1:
                continue
            _add_scaled(acc, binomial(n - 1, j - 1), chains[j][n - j])
        sums.append(tuple(acc))
    return sums


def partition_chain_sums(a, xs, bases, k, sign=1, min_length=1):
    """The same sums as :func:`grouped_chain_sums`, one partition of P_n at a time."""
    sums = []
    for n in range(1, k + 1):
        acc = [ZERO] * a.dim
        for partition in enumerate_partitions(n):
            sizes = partition.sizes
            if len(sizes) < min_length:
                continue
            v = bases[sizes[-1] - 1]
            for i in sizes[:-1]:
                v = a.bracket_coords(xs[i - 1], v)
            _add_scaled(acc, sign ** (len(sizes) - 1), v)
        sums.append(tuple(acc))
    return sums


CHAIN_SUMS = {COMPOSITIONS: grouped_chain_sums, PARTITIONS: partition_chain_sums}


def _ad_matrix(a, coords):
    entries = [ZERO] * (a.dim * a.dim)
    for (i, j), row in a.constants.items():
        c = coords[i]
        if c:
            for m, value in enumerate(row):
                if value:
                    entries[m * a.dim + j] += c * value
    return RationalMatrix(a.dim, a.dim, tuple(entries))


def grouped_inverse_sums(a, xs, k, sign):
    """
    For n = 1..k, the sum over compositions of n of

        -sign^(l-1) N_(i_1, ..., i_l) ad_{x_{i_1}} ... ad_{x_{i_(l-1)}} x_{i_l}

    (ad_{x_{i_1}} outermost), through the operators
    R_m = sign * sum_i C(m-1, i-1) R_(m-i) ad_{x_i}.
    """
    ads = [_ad_matrix(a, x) for x in xs]
    operators = [RationalMatrix.identity(a.dim)]
    for m in range(1, k):
        total = RationalMatrix.zeros(a.dim)
        for i in range(1, m + 1):
            total = total + mat_mul(operators[m - i], ads[i - 1]).scale(sign * binomial(m - 1, i - 1))
        operators.append(total)

    sums = []
    for n in range(1, k + 1):
        acc = [ZERO] * a.dim
        for j in range(1, n + 1):
            _add_scaled(acc, -binomial(n - 1, j - 1), mat_vec(operators[n - j], xs[j - 1]))
        sums.append(tuple(acc))
    return sums


def partition_inverse_sums(a, xs, k, sign):
    sums = []
    for n in range(1, k + 1):
        acc = [ZERO] * a.dim
        for partition in enumerate_partitions(n):
            sizes = partition.sizes
            v = xs[sizes[-1] - 1]
            for i in reversed(sizes[:-1]):
                v = a.bracket_coords(xs[i - 1], v)
            _add_scaled(acc, -(sign ** (len(sizes) - 1)), v)
        sums.append(tuple(acc))
    return sums


INVERSE_SUMS = {COMPOSITIONS: grouped_inverse_sums, PARTITIONS: partition_inverse_sums}


def jet_multiply(A, B, strategy=COMPOSITIONS):
    """The product A * B in the trivialization both operands share."""
    _check_pair(A, B)
    _check_strategy(strategy)
    a = A.algebra
    xs = [c.coeffs for c in A.x]
    ys = [c.coeffs for c in B.x]
    g = A.g.compose(B.g)

    if A.side == RIGHT:
        ad_g = adjoint_matrix(a, A.g)
        sums = CHAIN_SUMS[strategy](a, xs, [_apply(ad_g, y) for y in ys], A.k)
        z = [tuple(p + q for p, q in zip(x, s)) for x, s in zip(xs, sums)]
    else:
        ad_h_inv = adjoint_matrix(a, B.g.inverse())
        sums = CHAIN_SUMS[strategy](a, ys, [_apply(ad_h_inv, x) for x in xs], A.k, sign=-1)
        z = [tuple(p + q for p, q in zip(y, s)) for y, s in zip(ys, sums)]

    return JetElement(A.k, g, tuple(AlgebraElement(a, c) for c in z), A.side)


def jet_inverse(A, strategy=COMPOSITIONS):
    _check_strategy(strategy)
    a = A.algebra
    xs = [c.coeffs for c in A.x]
    g_inv = A.g.inverse()
    if A.side == RIGHT:
        sums = INVERSE_SUMS[strategy](a, xs, A.k, sign=-1)
        outer = adjoint_matrix(a, g_inv)
    else:
        sums = INVERSE_SUMS[strategy](a, xs, A.k, sign=1)
        outer = adjoint_matrix(a, A.g)
    w = [_apply(outer, s) for s in sums]
    return JetElement(A.k, g_inv, tuple(AlgebraElement(a, c) for c in w), A.side)


def flip_side(A, strategy=COMPOSITIONS):
    """
    The same jet in the other trivialization.

    The left logarithmic derivative of c is minus the right logarithmic
    derivative of c^{-1} (and the other way round), so the fiber flips to
    minus the fiber of the inverse.
    """
    inverse = jet_inverse(A, strategy)
    other = LEFT if A.side == RIGHT else RIGHT
    return JetElement(A.k, A.g, tuple(-c for c in inverse.x), other)


def _pure_coefficient(n, i, j):
    # (ni+j-1)! / (n! (i!)^n (j-1)!) written as N_(i, ..., i, j)
    coefficient = 1
    running = 0
    for size in (i,) * n + (j,):
        running += size
        coefficient *= binomial(running - 1, size - 1)
    return coefficient


def pure_product(a, i, x, j, y, k):
    """
    (e, x in slot i) * (e, y in slot j) in the right-trivialized J^k.

    For i < j the product has x in slot i, y in slot j and the multiple
    (ni+j-1)!/(n!(i!)^n(j-1)!) ad_x^n y in slot ni + j; other index pairs
    are multiplied out.
    """
    for index in (i, j):
        if not 1 <= index <= k:
            raise JetInputError(f'Pure component index {index} is outside 1..{k}')
    if not i < j:
        logger.debug('pure_product(%d, %d): no closed form, multiplying out', i, j)
        return jet_multiply(pure_jet(a, k, i, x), pure_jet(a, k, j, y))

    slots = [AlgebraElement.zero(a)] * k
    slots[i - 1] = x
    slots[j - 1] = y
    power = y.coeffs
    n = 1
    while n * i + j <= k:
        power = a.bracket_coords(x.coeffs, power)
        slots[n * i + j - 1] = AlgebraElement(a, power).scale(_pure_coefficient(n, i, j))
        n += 1
    return JetElement(k, GroupPoint.identity(), tuple(slots), RIGHT)

