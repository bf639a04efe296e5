"""
The abelian extension g -> J^kG -> J^{k-1}G.

``group_cocycle`` is the group 2-cocycle c_k: the part of the top component
of a J^k product that is not x_k + Ad_g y_k. ``algebra_cocycle`` is its
infinitesimal counterpart sigma_k on J^{k-1}g, whose bracket is the
truncated polynomial bracket of ``jet_algebra_bracket``. Both identities are
checked on seeded random elements.
"""
import logging

from .algebras import AlgebraElement, GroupPoint, adjoint, bracket
from .exact import ZERO, RationalMatrix, binomial, mat_inverse
from .exceptions import JetInputError
from .jet_group import (
    CHAIN_SUMS, COMPOSITIONS, RIGHT, JetAlgebraElement, JetElement, identity_jet, jet_multiply, lift_jet,
)
from .reports import CheckReport
from .sampling import RationalSampler

logger = logging.getLogger(__name__)


def _check_cocycle_order(k):
    if k < 2:
        raise JetInputError(f'Cocycles start at order 2, got k = {k}')


def _check_operand(k, A, what='jet'):
    if A.k != k - 1:
        raise JetInputError(f'c_{k} takes {what}s of order {k - 1}, got order {A.k}')


def group_cocycle(a, k, A, B, strategy=COMPOSITIONS):
    """
    c_k(A, B): the sum over the partitions of {1..k} other than the single
    block of ad_{x_(i_(l-1))} ... ad_{x_(i_1)} Ad_g y_(i_l).
    """
    _check_cocycle_order(k)
    _check_operand(k, A)
    _check_operand(k, B)
    if A.side != RIGHT or B.side != RIGHT:
        raise JetInputError('The extension cocycle is defined in the right trivialization')
    if not (a.compatible(A.algebra) and a.compatible(B.algebra)):
        raise JetInputError(f'Jets over {A.algebra} and {B.algebra} used with algebra {a}')

    zero = (ZERO,) * a.dim
    xs = [c.coeffs for c in A.x] + [zero]
    bases = [adjoint(A.g, c).coeffs for c in B.x] + [zero]
    sums = CHAIN_SUMS[strategy](a, xs, bases, k, min_length=2)
    return AlgebraElement(a, sums[k - 1])


def algebra_cocycle(a, k, A, B):
    """sigma_k(A, B) = sum_(i=1)^(k-1) C(k, i) [x_i, y_(k-i)]."""
    _check_cocycle_order(k)
    _check_operand(k, A, 'jet algebra element')
    _check_operand(k, B, 'jet algebra element')
    total = AlgebraElement.zero(a)
    for i in range(1, k):
        total = total + bracket(a, A.x[i - 1], B.x[k - i - 1]).scale(binomial(k, i))
    return total


def jet_algebra_bracket(A, B):
    """Component n is sum_(i=0)^n C(n, i) [x_i, y_(n-i)], with x_0 = xi and y_0 = eta."""
    if A.k != B.k:
        raise JetInputError(f'Cannot bracket jet algebra elements of orders {A.k} and {B.k}')
    a = A.algebra
    xs, ys = A.components, B.components
    out = []
    for n in range(A.k + 1):
        total = AlgebraElement.zero(a)
        for i in range(n + 1):
            total = total + bracket(a, xs[i], ys[n - i]).scale(binomial(n, i))
        out.append(total)
    return JetAlgebraElement(A.k, out[0], tuple(out[1:]))


def _fiber_jet(A):
    return JetElement(A.k, GroupPoint.identity(), A.x, RIGHT)


def _linear_coefficient_weights(degree):
    """Weights w_r with p'(0)-coefficient = sum_r w_r p(r) for deg p <= ``degree``."""
    nodes = range(degree + 1)
    vandermonde = RationalMatrix(degree + 1, degree + 1, tuple(r ** e for r in nodes for e in range(degree + 1)))
    return mat_inverse(vandermonde).row(1)


def bilinear_part(a, k, A, B, cocycle=group_cocycle):
    """
    The s*t coefficient of c_k(sA, tB) on the fibers of A and B.

    c_k is linear in its second argument and a polynomial of degree at most
    k - 1 in the first, so the coefficient is read off exactly by
    interpolating s at 0, 1, ..., k - 1.
    """
    _check_cocycle_order(k)
    weights = _linear_coefficient_weights(k - 1)
    left, right = _fiber_jet(A), _fiber_jet(B)
    total = AlgebraElement.zero(a)
    for r, weight in enumerate(weights):
        if weight:
            scaled = JetElement(left.k, left.g, tuple(x.scale(r) for x in left.x), RIGHT)
            total = total + cocycle(a, k, scaled, right).scale(weight)
    return total


def polarized_cocycle(a, k, A, B, cocycle=group_cocycle):
    """The antisymmetrized bilinear part of c_k, which is sigma_k."""
    return bilinear_part(a, k, A, B, cocycle) - bilinear_part(a, k, B, A, cocycle)


def verify_group_cocycle(a, k, trials, seed, cocycle=group_cocycle):
    """
    rho(A) c(B, C) - c(AB, C) + c(A, BC) - c(A, B) = 0 with rho(A) = Ad_g,
    normalization, and reconstruction of the J^k product from c_k.
    """
    _check_cocycle_order(k)
    name = f'group cocycle identity c_{k} ({a})'
    sampler = RationalSampler(seed)
    identity = identity_jet(a, k - 1)
    for trial in range(1, trials + 1):
        A, B, C = (sampler.jet_element(a, k - 1) for _ in range(3))

        lhs = (adjoint(A.g, cocycle(a, k, B, C))
               - cocycle(a, k, jet_multiply(A, B), C)
               + cocycle(a, k, A, jet_multiply(B, C))
               - cocycle(a, k, A, B))
        if not lhs.is_zero:
            return _failed(name, trial, f'A={A} B={B} C={C}: coboundary is {lhs}')

        if not (cocycle(a, k, A, identity).is_zero and cocycle(a, k, identity, B).is_zero):
            return _failed(name, trial, f'A={A} B={B}: c_{k} is not normalized')

        top_a, top_b = sampler.element(a), sampler.element(a)
        product = jet_multiply(lift_jet(A, top_a), lift_jet(B, top_b))
        expected = lift_jet(jet_multiply(A, B), top_a + adjoint(A.g, top_b) + cocycle(a, k, A, B))
        if product != expected:
            return _failed(name, trial, f'A={A} B={B}: lifted product {product} != {expected}')
    logger.debug('%s: %d trials passed', name, trials)
    return CheckReport(name, True, trials)


def verify_algebra_cocycle(a, k, trials, seed):
    """
    The Lie algebra 2-cocycle identity for sigma_k with rho(xi, ...) v = [xi, v],
    and sigma_k against the polarized group cocycle.
    """
    _check_cocycle_order(k)
    name = f'algebra cocycle identity sigma_{k} ({a})'
    if a.leibniz:
        return CheckReport.skip(name, 'antisymmetrization presumes a Lie bracket')
    sampler = RationalSampler(seed)
    for trial in range(1, trials + 1):
        A, B, C = (sampler.jet_algebra_element(a, k - 1) for _ in range(3))

        def sigma(u, v):
            return algebra_cocycle(a, k, u, v)

        def rho(u, v):
            return bracket(a, u.xi, v)

        cyclic = ((A, B, C), (B, C, A), (C, A, B))
        lhs = AlgebraElement.zero(a)
        for u, v, w in cyclic:
            lhs = lhs + rho(u, sigma(v, w)) - sigma(jet_algebra_bracket(u, v), w)
        if not lhs.is_zero:
            return _failed(name, trial, f'A={A} B={B} C={C}: coboundary is {lhs}')

        polarized = polarized_cocycle(a, k, A, B)
        direct = sigma(A, B)
        if polarized != direct:
            return _failed(name, trial, f'A={A} B={B}: polarized c_{k} is {polarized}, sigma_{k} is {direct}')
    logger.debug('%s: %d trials passed', name, trials)
    return CheckReport(name, True, trials)


def _failed(name, trial, counterexample):
    logger.warning('%s failed on trial %d: %s', name, trial, counterexample)
    return CheckReport(name, False, trial, counterexample)
