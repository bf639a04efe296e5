"""
The higher tangent group T^kG = G x (sum over nonempty alpha of eps^alpha g).

Multi-indices alpha are bitmasks over {1, ..., k} (bit e-1 stands for e),
and components are stored densely in ascending mask order, so the
components of a k-th order element are indexed 1 .. 2^k - 1. Partitions of
a multi-index are never enumerated directly: the partitions of
{1, ..., |alpha|} are carried over by the increasing bijection onto alpha.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _all_orderings

from .algebras import AlgebraElement, GroupPoint, adjoint_matrix, validate_group_point
from .exact import ZERO, mat_vec
from .exceptions import JetInputError
from .jet_group import RIGHT, SIDES, JetElement
from .partitions import enumerate_partitions


def mask_elements(mask):
    """The elements of the multi-index, ascending."""
    elements = []
    e = 1
    while mask:
        if mask & 1:
            elements.append(e)
        mask >>= 1
        e += 1
    return tuple(elements)


def mask_from_elements(elements):
    mask = 0
    for e in elements:
        if e < 1:
            raise JetInputError(f'Multi-index elements start at 1, got {e}')
        mask |= 1 << (e - 1)
    return mask


def mask_size(mask):
    return bin(mask).count('1')


def mask_label(mask):
    return ''.join(str(e) for e in mask_elements(mask))


def parse_mask(label, k):
    """``"13"`` -> the mask of {1, 3}; digits must be distinct and ascending."""
    if not label or not label.isdigit():
        raise JetInputError(f'Malformed multi-index {label!r}')
    elements = [int(d) for d in label]
    if any(not 1 <= e <= k for e in elements):
        raise JetInputError(f'Multi-index {label!r} is not a subset of {{1, ..., {k}}}')
    if any(a >= b for a, b in zip(elements, elements[1:])):
        raise JetInputError(f'Multi-index {label!r} must list distinct digits in ascending order')
    return mask_from_elements(elements)


def all_masks(k):
    return range(1, 1 << k)


@lru_cache(maxsize=None)
def _block_chains(mask):
    """For each partition of the multi-index, its blocks as masks, in canonical order."""
    elements = mask_elements(mask)
    return tuple(
        tuple(mask_from_elements(block) for block in partition.transport(elements))
        for partition in enumerate_partitions(len(elements))
    )


@dataclass(frozen=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise JetInputError(f'{images} is not a permutation of 1..{len(images)}')
        object.__setattr__(self, 'images', images)

    @classmethod
    def identity(cls, k):
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def transposition(cls, k, i, j):
        images = list(range(1, k + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @classmethod
    def all(cls, k):
        return [cls(images) for images in _all_orderings(range(1, k + 1))]

    @property
    def k(self):
        return len(self.images)

    def __call__(self, e):
        return self.images[e - 1]

    def compose(self, other):
        """``self`` after ``other``."""
        if self.k != other.k:
            raise JetInputError('Permutations of different sizes cannot be composed')
        return Permutation(tuple(self(other(e)) for e in range(1, self.k + 1)))

    def apply_mask(self, mask):
        return mask_from_elements(self(e) for e in mask_elements(mask))


@dataclass(frozen=True)
class TangentElement:
    k: int
    g: GroupPoint
    components: tuple
    side: str = RIGHT

    def __post_init__(self):
        components = tuple(self.components)
        if self.k < 1:
            raise JetInputError(f'Tangent order must be at least 1, got {self.k}')
        if len(components) != (1 << self.k) - 1:
            raise JetInputError(
                f'A {self.k}-th order tangent element has {(1 << self.k) - 1} components, got {len(components)}'
            )
        if self.side not in SIDES:
            raise JetInputError(f'Unknown trivialization side {self.side!r}')
        algebra = components[0].algebra
        if any(not algebra.compatible(c.algebra) for c in components):
            raise JetInputError('All components of a tangent element must lie in one algebra')
        validate_group_point(algebra, self.g)
        object.__setattr__(self, 'components', components)

    @classmethod
    def from_mapping(cls, k, g, mapping, side=RIGHT, algebra=None):
        """Build from ``{mask: element}``; missing multi-indices are zero."""
        algebra = algebra or next(iter(mapping.values())).algebra
        zero = AlgebraElement.zero(algebra)
        unknown = [m for m in mapping if not 1 <= m < (1 << k)]
        if unknown:
            raise JetInputError(f'Multi-index masks {unknown} are outside order {k}')
        return cls(k, g, tuple(mapping.get(m, zero) for m in all_masks(k)), side)

    @property
    def algebra(self):
        return self.components[0].algebra

    def component(self, mask):
        return self.components[mask - 1]

    def items(self):
        return zip(all_masks(self.k), self.components)

    @property
    def is_identity(self):
        return self.g.is_identity and all(c.is_zero for c in self.components)

    def __str__(self):
        return '(%s; %s)' % (self.g, ', '.join(f'{mask_label(m)}: {c}' for m, c in self.items()))


def identity_tangent(a, k, side=RIGHT):
    return TangentElement(k, GroupPoint.identity(), (AlgebraElement.zero(a),) * ((1 << k) - 1), side)


def pure_tangent(a, k, mask, x, side=RIGHT, g=None):
    return TangentElement.from_mapping(k, g or GroupPoint.identity(), {mask: x}, side, algebra=a)


def _check_pair(A, B):
    if A.k != B.k:
        raise JetInputError(f'Cannot multiply tangent elements of orders {A.k} and {B.k}')
    if A.side != B.side:
        raise JetInputError(f'Cannot multiply a {A.side}-trivialized element by a {B.side}-trivialized one')
    if not A.algebra.compatible(B.algebra):
        raise JetInputError(f'Tangent elements over {A.algebra} and {B.algebra} cannot be multiplied')


def _combine(a, k, outer, inner, bases, sign):
    """
    For each alpha: outer_alpha + sum over partitions (l_1 | ... | l_m) of
    sign^(m-1) ad_{inner_{l_(m-1)}} ... ad_{inner_{l_1}} bases_{l_m}.
    """
    out = []
    for mask in all_masks(k):
        acc = list(outer[mask - 1])
        for blocks in _block_chains(mask):
            v = bases[blocks[-1] - 1]
            if not any(v):
                continue
            for block in blocks[:-1]:
                v = a.bracket_coords(inner[block - 1], v)
            factor = sign ** (len(blocks) - 1)
            for m, c in enumerate(v):
                if c:
                    acc[m] += factor * c
        out.append(AlgebraElement(a, acc))
    return tuple(out)


def _apply(matrix, v):
    return v if matrix is None else mat_vec(matrix, v)


def tangent_multiply(A, B):
    _check_pair(A, B)
    a = A.algebra
    xs = [c.coeffs for c in A.components]
    ys = [c.coeffs for c in B.components]
    if A.side == RIGHT:
        ad_g = adjoint_matrix(a, A.g)
        z = _combine(a, A.k, xs, xs, [_apply(ad_g, y) for y in ys], 1)
    else:
        ad_h_inv = adjoint_matrix(a, B.g.inverse())
        z = _combine(a, A.k, ys, ys, [_apply(ad_h_inv, x) for x in xs], -1)
    return TangentElement(A.k, A.g.compose(B.g), z, A.side)


def tangent_inverse(A):
    """
    w_alpha = sum over partitions of (-1)^m Ad_{g^-1} ad_{x_{l_1}} ... ad_{x_{l_(m-1)}} x_{l_m}
    on the right; on the left every sign is -1 and Ad_g replaces Ad_{g^-1}.
    """
    a = A.algebra
    xs = [c.coeffs for c in A.components]
    g_inv = A.g.inverse()
    right = A.side == RIGHT
    outer = adjoint_matrix(a, g_inv if right else A.g)
    w = []
    for mask in all_masks(A.k):
        acc = [ZERO] * a.dim
        for blocks in _block_chains(mask):
            v = xs[blocks[-1] - 1]
            for block in reversed(blocks[:-1]):
                v = a.bracket_coords(xs[block - 1], v)
            factor = (-1) ** len(blocks) if right else -1
            for m, c in enumerate(v):
                if c:
                    acc[m] += factor * c
        w.append(AlgebraElement(a, _apply(outer, tuple(acc))))
    return TangentElement(A.k, g_inv, tuple(w), A.side)


def permute(sigma, A):
    """sigma . (g, eps^alpha x_alpha) = (g, eps^sigma(alpha) x_alpha)."""
    if sigma.k != A.k:
        raise JetInputError(f'A permutation of {sigma.k} letters cannot act on order {A.k}')
    moved = {sigma.apply_mask(mask): c for mask, c in A.items()}
    return TangentElement(A.k, A.g, tuple(moved[m] for m in all_masks(A.k)), A.side)


def is_symmetric(A):
    """True when every component depends only on the size of its multi-index."""
    seen = {}
    for mask, c in A.items():
        first = seen.setdefault(mask_size(mask), c)
        if first != c:
            return False
    return True


def embed_jet(J):
    components = tuple(J.x[mask_size(mask) - 1] for mask in all_masks(J.k))
    return TangentElement(J.k, J.g, components, J.side)


def project_jet(A):
    if not is_symmetric(A):
        raise JetInputError('Only elements fixed by every permutation come from a jet')
    return JetElement(A.k, A.g, tuple(A.component((1 << n) - 1) for n in range(1, A.k + 1)), A.side)


@lru_cache(maxsize=None)
def factor_order(k):
    """123, 23, 13, 3, 12, 2, 1 for k = 3: adjoin k to the order for k - 1 (and to the empty set), then repeat it."""
    if k == 1:
        return (1,)
    previous = factor_order(k - 1)
    top = 1 << (k - 1)
    return tuple(mask | top for mask in previous + (0,)) + previous


def fold_product(factors):
    product = factors[0]
    for factor in factors[1:]:
        product = tangent_multiply(product, factor)
    return product


def factor_pure(A):
    """
    Pure factors, one per multi-index, whose product in order is ``A``.
    A nontrivial group part becomes a last factor (g, 0).
    """
    if A.side != RIGHT:
        raise JetInputError('Pure factorization is defined for the right trivialization')
    a = A.algebra
    factors = [pure_tangent(a, A.k, mask, A.component(mask)) for mask in factor_order(A.k)]
    if not A.g.is_identity:
        factors.append(TangentElement(A.k, A.g, (AlgebraElement.zero(a),) * ((1 << A.k) - 1), RIGHT))
    return factors

