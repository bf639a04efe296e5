"""
Seeded generation of small random rationals and of random elements.

The generator is a 64-bit linear congruential recurrence,

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64,

and every draw is the high 31 bits ``state >> 33``. A coefficient p/q takes
two draws: p = draw mod 19 - 9 and q = draw mod 4 + 1. The constants are
fixed so a seed reproduces the same elements anywhere.
"""
import logging
from fractions import Fraction

from .algebras import MATRIX, AlgebraElement, GroupPoint, validate_group_point
from .exact import RationalMatrix, mat_inverse, mat_mul
from .exceptions import JetGroupsError, SingularMatrixError
from .jet_group import RIGHT, JetAlgebraElement, JetElement
from .tangent_group import TangentElement, embed_jet

logger = logging.getLogger(__name__)

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MODULUS = 1 << 64

MAX_ATTEMPTS = 32


class RationalSampler:

    def __init__(self, seed):
        self.state = seed % MODULUS

    def draw(self):
        self.state = (MULTIPLIER * self.state + INCREMENT) % MODULUS
        return self.state >> 33

    def rational(self):
        p = self.draw() % 19 - 9
        q = self.draw() % 4 + 1
        return Fraction(p, q)

    def element(self, a):
        return AlgebraElement(a, tuple(self.rational() for _ in range(a.dim)))

    def matrix(self, rows, cols=None):
        cols = rows if cols is None else cols
        return RationalMatrix(rows, cols, tuple(self.rational() for _ in range(rows * cols)))

    def group_point(self, a):
        """
        A Cayley transform (I + X)(I - X)^-1 of a random X for matrix
        algebras, a random invertible automorphism for abelian tables and the
        identity for everything else.
        """
        if a.leibniz:
            return GroupPoint.identity()
        if a.kind == MATRIX:
            identity = RationalMatrix.identity(a.matrix_size)
            for _ in range(MAX_ATTEMPTS):
                X = self.element(a).matrix
                try:
                    g = GroupPoint.of_matrix(mat_mul(identity + X, mat_inverse(identity - X)))
                    return validate_group_point(a, g)
                except SingularMatrixError:
                    continue
                except JetGroupsError as exc:
                    # Cayley transforms of a matrix basis need not normalize its span
                    logger.debug('Rejected group point for %s: %s', a, exc)
                    continue
            logger.warning('No usable group point for %s after %d attempts; using the identity', a, MAX_ATTEMPTS)
            return GroupPoint.identity()
        if not a.constants:
            for _ in range(MAX_ATTEMPTS):
                candidate = self.matrix(a.dim)
                try:
                    mat_inverse(candidate)
                except SingularMatrixError:
                    continue
                return GroupPoint.automorphism(candidate)
        return GroupPoint.identity()

    def jet_element(self, a, k, side=RIGHT, with_group=True):
        g = self.group_point(a) if with_group else GroupPoint.identity()
        return JetElement(k, g, tuple(self.element(a) for _ in range(k)), side)

    def tangent_element(self, a, k, side=RIGHT, with_group=True):
        g = self.group_point(a) if with_group else GroupPoint.identity()
        return TangentElement(k, g, tuple(self.element(a) for _ in range((1 << k) - 1)), side)

    def symmetric_tangent_element(self, a, k, side=RIGHT, with_group=True):
        return embed_jet(self.jet_element(a, k, side, with_group))

    def jet_algebra_element(self, a, k):
        return JetAlgebraElement(k, self.element(a), tuple(self.element(a) for _ in range(k)))
