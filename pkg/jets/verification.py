"""
Property suites behind ``manage.py verify``.

Every check draws its inputs from a :class:`RationalSampler` seeded from the
suite seed and the check's position, so a report is reproducible on its
own and the report list does not depend on whether checks ran in parallel.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import product

from . import conf, taylor
from .algebras import MATRIX, AlgebraElement, bracket, builtin, matrix_bracket, verify_algebra
from .cocycles import algebra_cocycle, polarized_cocycle, verify_algebra_cocycle, verify_group_cocycle
from .exact import bell_number
from .exceptions import JetInputError
from .jet_group import (
    LEFT, PARTITIONS, RIGHT, JetAlgebraElement, JetElement, flip_side, identity_jet, jet_inverse,
    jet_multiply, pure_jet, pure_product,
)
from .partitions import (
    compositions, count_with_sizes, derived_partitions, enumerate_partitions, parent_partition,
    partitions_with_sizes,
)
from .reports import CheckReport
from .sampling import RationalSampler
from .tangent_group import (
    Permutation, embed_jet, factor_pure, fold_product, identity_tangent, is_symmetric, permute,
    project_jet, tangent_inverse, tangent_multiply,
)

logger = logging.getLogger(__name__)

PARTITIONS_SUITE = 'partitions'
GROUP_AXIOMS = 'group-axioms'
ORACLE = 'oracle'
COCYCLES = 'cocycles'
ALL = 'all'
SUITES = (ALL, GROUP_AXIOMS, ORACLE, COCYCLES, PARTITIONS_SUITE)

DEFAULT_ALGEBRAS = ('sl2', 'heis3', 'so3', 'nilpotent_upper(4)', 'leibniz2')

# tangent elements have 2^k - 1 components; the axioms are checked up to this order
TANGENT_CHECK_ORDER = 4
# oracle side and roundtrip checks run at full strength up to this order
EXTRA_CHECK_ORDER = 4


class Check:
    """A named property evaluated on ``trials`` sampled inputs."""

    def __init__(self, name, body, trials=1):
        self.name = name
        self.body = body
        self.trials = trials

    def run(self, seed):
        sampler = RationalSampler(seed)
        for trial in range(1, self.trials + 1):
            counterexample = self.body(sampler)
            if counterexample is not None:
                logger.warning('%s failed on trial %d: %s', self.name, trial, counterexample)
                return CheckReport(self.name, False, trial, counterexample)
        logger.debug('%s: %d trials passed', self.name, self.trials)
        return CheckReport(self.name, True, self.trials)


class Deferred:
    """A check that produces its own report (exhaustive checks, cocycle verifiers)."""

    def __init__(self, name, produce):
        self.name = name
        self.produce = produce

    def run(self, seed):
        return self.produce(seed)


def _unequal(left, right, label):
    if left != right:
        return f'{label}: {left} != {right}'
    return None


# Partitions

def _bell_counts():
    for n in range(1, 9):
        found = len(enumerate_partitions(n))
        if found != bell_number(n):
            return CheckReport('|P_n| equals the Bell number', False, n, f'|P_{n}| = {found}, B_{n} = {bell_number(n)}')
    return CheckReport('|P_n| equals the Bell number', True, 8)


def _count_formula():
    checked = 0
    for n in range(1, 8):
        for sizes in compositions(n):
            checked += 1
            found = len(partitions_with_sizes(n, sizes))
            if found != count_with_sizes(sizes):
                return CheckReport('block-size count formula', False, checked,
                                   f'sizes {sizes}: {found} partitions, formula gives {count_with_sizes(sizes)}')
    return CheckReport('block-size count formula', True, checked)


def _derived_bijection():
    name = 'derived partitions biject onto P_(n+1)'
    for n in range(1, 7):
        derived = [d for p in enumerate_partitions(n) for d in derived_partitions(p)]
        if len(derived) != len(set(derived)) or set(derived) != set(enumerate_partitions(n + 1)):
            return CheckReport(name, False, n, f'derived partitions of P_{n} do not match P_{n + 1}')
        for p in enumerate_partitions(n):
            for d in derived_partitions(p):
                if parent_partition(d) != p:
                    return CheckReport(name, False, n, f'parent of {d} is {parent_partition(d)}, expected {p}')
    return CheckReport(name, True, 6)


def partition_checks():
    return [
        Deferred('|P_n| equals the Bell number', lambda seed: _bell_counts()),
        Deferred('block-size count formula', lambda seed: _count_formula()),
        Deferred('derived partitions biject onto P_(n+1)', lambda seed: _derived_bijection()),
    ]


# Group axioms

def _jet_axiom_checks(a, k, trials):
    checks = []
    sides = (RIGHT,) if a.leibniz else (RIGHT, LEFT)
    for side in sides:
        def associativity(s, side=side):
            A, B, C = (s.jet_element(a, k, side) for _ in range(3))
            return _unequal(jet_multiply(jet_multiply(A, B), C), jet_multiply(A, jet_multiply(B, C)),
                            f'(AB)C vs A(BC) for A={A} B={B} C={C}')

        def identity(s, side=side):
            A = s.jet_element(a, k, side)
            e = identity_jet(a, k, side)
            return (_unequal(jet_multiply(A, e), A, f'A e for A={A}')
                    or _unequal(jet_multiply(e, A), A, f'e A for A={A}'))

        def inverse(s, side=side):
            A = s.jet_element(a, k, side)
            e = identity_jet(a, k, side)
            A_inv = jet_inverse(A)
            return (_unequal(jet_multiply(A, A_inv), e, f'A A^-1 for A={A}')
                    or _unequal(jet_multiply(A_inv, A), e, f'A^-1 A for A={A}'))

        def strategies(s, side=side):
            A, B = s.jet_element(a, k, side), s.jet_element(a, k, side)
            return (_unequal(jet_multiply(A, B), jet_multiply(A, B, PARTITIONS), f'strategies on A={A} B={B}')
                    or _unequal(jet_inverse(A), jet_inverse(A, PARTITIONS), f'strategies on A={A}^-1'))

        label = f'J^{k} {side} ({a})'
        checks += [
            Check(f'{label}: associativity', associativity, trials),
            Check(f'{label}: identity', identity, trials),
            Check(f'{label}: inverse', inverse, trials),
            Check(f'{label}: composition and partition sums agree', strategies, trials),
        ]

    def affine(s):
        A, B, C = (s.jet_element(a, k, with_group=False) for _ in range(3))
        BC = JetElement(k, B.g, tuple(b + c for b, c in zip(B.x, C.x)))
        left = jet_multiply(A, BC).x
        right = tuple(p + q - x for p, q, x in zip(jet_multiply(A, B).x, jet_multiply(A, C).x, A.x))
        return _unequal(left, right, f'affineness for A={A} B={B} C={C}')

    def pure(s):
        for i, j in product(range(1, k + 1), repeat=2):
            if i >= j:
                continue
            x, y = s.element(a), s.element(a)
            closed = pure_product(a, i, x, j, y, k)
            multiplied = jet_multiply(pure_jet(a, k, i, x), pure_jet(a, k, j, y))
            if closed != multiplied:
                return f'pure product ({i}, {j}) with x={x} y={y}: {closed} != {multiplied}'
        return None

    checks += [
        Check(f'J_{k} ({a}): affine in the second argument', affine, trials),
        Check(f'J_{k} ({a}): pure product closed form', pure, max(1, trials // 4)),
    ]
    if not a.leibniz:
        def flip(s):
            A = s.jet_element(a, k)
            return _unequal(flip_side(flip_side(A)), A, f'flip twice for A={A}')

        checks.append(Check(f'J^{k} ({a}): side flip is an involution', flip, trials))
    return checks


def _tangent_axiom_checks(a, k, trials):
    checks = []
    with_group = not a.leibniz

    def associativity(s):
        A, B, C = (s.tangent_element(a, k, with_group=with_group) for _ in range(3))
        return _unequal(tangent_multiply(tangent_multiply(A, B), C), tangent_multiply(A, tangent_multiply(B, C)),
                        f'(AB)C vs A(BC) for A={A} B={B} C={C}')

    def inverse(s):
        A = s.tangent_element(a, k, with_group=with_group)
        e = identity_tangent(a, k)
        return (_unequal(tangent_multiply(A, e), A, f'A e for A={A}')
                or _unequal(tangent_multiply(A, tangent_inverse(A)), e, f'A A^-1 for A={A}')
                or _unequal(tangent_multiply(tangent_inverse(A), A), e, f'A^-1 A for A={A}'))

    def left_inverse(s):
        A = s.tangent_element(a, k, LEFT, with_group=with_group)
        e = identity_tangent(a, k, LEFT)
        return _unequal(tangent_multiply(A, tangent_inverse(A)), e, f'left A A^-1 for A={A}')

    def fixed_points(s):
        A = s.jet_element(a, k, with_group=with_group)
        B = s.jet_element(a, k, with_group=with_group)
        both = tangent_multiply(embed_jet(A), embed_jet(B))
        if both != embed_jet(jet_multiply(A, B)):
            return f'embedding is not multiplicative on A={A} B={B}'
        if not (is_symmetric(both) and is_symmetric(tangent_inverse(embed_jet(A)))):
            return f'fixed points not closed for A={A} B={B}'
        return _unequal(project_jet(embed_jet(A)), A, 'project after embed')

    def factorization(s):
        A = s.tangent_element(a, k, with_group=with_group)
        return _unequal(fold_product(factor_pure(A)), A, f'pure factors of A={A}')

    label = f'T^{k} ({a})'
    checks += [
        Check(f'{label}: associativity', associativity, trials),
        Check(f'{label}: identity and inverse', inverse, trials),
        Check(f'{label}: left identity and inverse', left_inverse, max(1, trials // 2)),
        Check(f'{label}: fixed points form a subgroup isomorphic to J^{k}', fixed_points, trials),
        Check(f'{label}: pure factorization', factorization, max(1, trials // 2)),
    ]
    if k <= 3:
        def action(s):
            A = s.tangent_element(a, k, with_group=with_group)
            if permute(Permutation.identity(k), A) != A:
                return f'identity permutation moves A={A}'
            for sigma, tau in product(Permutation.all(k), repeat=2):
                if permute(sigma.compose(tau), A) != permute(sigma, permute(tau, A)):
                    return f'action fails on {sigma.images}, {tau.images}'
            symmetric = s.symmetric_tangent_element(a, k, with_group=with_group)
            if any(permute(sigma, symmetric) != symmetric for sigma in Permutation.all(k)):
                return 'a symmetric element is moved by a permutation'
            return None

        checks.append(Check(f'{label}: S_{k} acts on the left', action, max(1, trials // 4)))
    return checks


def group_axiom_checks(a, max_k, trials):
    checks = [Deferred(f'algebra axioms ({a})', lambda seed: verify_algebra(a))]
    if a.kind == MATRIX:
        def commutator(s):
            x, y = s.element(a), s.element(a)
            return _unequal(bracket(a, x, y), matrix_bracket(a, x, y), f'[{x}, {y}]')
        checks.append(Check(f'table bracket matches commutators ({a})', commutator, trials))
    for k in range(1, max_k + 1):
        checks += _jet_axiom_checks(a, k, trials)
    for k in range(1, min(max_k, TANGENT_CHECK_ORDER) + 1):
        checks += _tangent_axiom_checks(a, k, trials)
    return checks


# Oracle

def _remark_components(a, xs):
    """x_1, x_2, x_3 + 1/2[x_1, x_2], x_4 + [x_1, x_3] + 1/2[x_1, [x_1, x_2]]."""
    def br(u, v):
        return bracket(a, u, v)

    expected = list(xs[:2])
    if len(xs) >= 3:
        expected.append(xs[2] + br(xs[0], xs[1]).scale(Fraction(1, 2)))
    if len(xs) >= 4:
        expected.append(xs[3] + br(xs[0], xs[2]) + br(xs[0], br(xs[0], xs[1])).scale(Fraction(1, 2)))
    return tuple(expected)


def oracle_checks(a, max_k, trials):
    if a.kind != MATRIX:
        return [Deferred(f'Taylor oracle ({a})',
                         lambda seed: CheckReport.skip(f'Taylor oracle ({a})', 'abstract algebra: no matrix curves'))]
    checks = []
    for k in range(1, max_k + 1):
        def multiply(s, k=k):
            A, B = s.jet_element(a, k), s.jet_element(a, k)
            return _unequal(jet_multiply(A, B), taylor.oracle_multiply(A, B), f'product of A={A} B={B}')

        def invert(s, k=k):
            A = s.jet_element(a, k)
            return _unequal(jet_inverse(A), taylor.oracle_inverse(A), f'inverse of A={A}')

        def left_multiply(s, k=k):
            A, B = s.jet_element(a, k, LEFT), s.jet_element(a, k, LEFT)
            return (_unequal(jet_multiply(A, B), taylor.oracle_multiply(A, B), f'left product of A={A} B={B}')
                    or _unequal(jet_inverse(A), taylor.oracle_inverse(A), f'left inverse of A={A}'))

        def roundtrip(s, k=k):
            A = s.jet_element(a, k)
            curve = taylor.from_trivialization(A)
            return (_unequal(taylor.trivialize(curve, a, RIGHT), A, f'trivialization roundtrip of A={A}')
                    or _unequal(taylor.convert_side(A), flip_side(A), f'side conversion of A={A}'))

        label = f'J^{k} vs Taylor oracle ({a})'
        extra = max(1, trials // 2) if k <= EXTRA_CHECK_ORDER else max(1, trials // 16)
        checks += [
            Check(f'{label}: multiply', multiply, trials),
            Check(f'{label}: inverse', invert, trials),
            Check(f'{label}: left trivialization', left_multiply, extra),
            Check(f'{label}: trivialization roundtrip', roundtrip, extra),
        ]

    def exponential(s):
        k = max(1, min(max_k, 4))
        xs = tuple(s.element(a) for _ in range(k))
        g = s.group_point(a)
        curve = taylor.exp_jet(taylor.curve_jet(a, xs))
        if not g.is_identity:
            curve = taylor.mjet_mul(curve, taylor.constant_jet(g.matrix, k))
        found = taylor.trivialize(curve, a, RIGHT).x
        return _unequal(found, _remark_components(a, xs), f'exp x(t) g with x={xs}')

    checks.append(Check(f'exp(x(t)) g trivializes as predicted ({a})', exponential, max(1, trials // 2)))
    return checks


# Cocycles

def cocycle_checks(a, max_k, trials):
    checks = []
    for k in range(2, max(2, max_k) + 1):
        checks.append(Deferred(f'group cocycle c_{k} ({a})',
                               lambda seed, k=k: verify_group_cocycle(a, k, trials, seed)))
        checks.append(Deferred(f'algebra cocycle sigma_{k} ({a})',
                               lambda seed, k=k: verify_algebra_cocycle(a, k, trials, seed)))
    if not a.leibniz:
        def sigma_two(s):
            x, y = s.element(a), s.element(a)
            zero = AlgebraElement.zero(a)
            A, B = JetAlgebraElement(1, zero, (x,)), JetAlgebraElement(1, zero, (y,))
            expected = bracket(a, x, y).scale(2)
            return (_unequal(algebra_cocycle(a, 2, A, B), expected, f'sigma_2 on x={x} y={y}')
                    or _unequal(polarized_cocycle(a, 2, A, B), expected, f'polarized c_2 on x={x} y={y}'))

        checks.append(Check(f'sigma_2 = 2[x, y] ({a})', sigma_two, trials))
    return checks


SUITE_BUILDERS = {
    GROUP_AXIOMS: group_axiom_checks,
    ORACLE: oracle_checks,
    COCYCLES: cocycle_checks,
}


def collect_checks(suite, algebras, max_k, trials):
    if suite not in SUITES:
        raise JetInputError(f'Unknown suite {suite!r}')
    checks = []
    if suite in (ALL, PARTITIONS_SUITE):
        checks += partition_checks()
    names = (GROUP_AXIOMS, ORACLE, COCYCLES) if suite == ALL else (suite,) if suite in SUITE_BUILDERS else ()
    for name in names:
        for a in algebras:
            checks += SUITE_BUILDERS[name](a, max_k, trials)
    return checks


def run_suite(suite, algebras=None, max_k=None, trials=None, seed=None, parallel=False):
    """Run a suite and return its reports in a fixed order."""
    algebras = [builtin(name) for name in DEFAULT_ALGEBRAS] if algebras is None else list(algebras)
    max_k = conf.get('DEFAULT_CHECK_ORDER') if max_k is None else max_k
    trials = conf.get('DEFAULT_TRIALS') if trials is None else trials
    seed = conf.get('DEFAULT_SEED') if seed is None else seed

    checks = collect_checks(suite, algebras, max_k, trials)
    seeds = [seed + index for index in range(len(checks))]
    logger.debug('Running %d checks of suite %s (k <= %d, %d trials, seed %d)',
                 len(checks), suite, max_k, trials, seed)
    if parallel:
        with ThreadPoolExecutor() as pool:
            return list(pool.map(lambda pair: pair[0].run(pair[1]), zip(checks, seeds)))
    return [check.run(s) for check, s in zip(checks, seeds)]
