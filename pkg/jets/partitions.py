"""
Anti-lexicographically ordered set partitions of {1, ..., n}.

Read right to left, every block of such a partition holds the largest
element not yet placed. Canonically this means the blocks are sorted by
strictly ascending maxima, which is the form every ``Partition`` is kept
in. These partitions index the summands of every jet and tangent group law.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import conf
from .exact import binomial
from .exceptions import JetInputError

Composition = tuple


@dataclass(frozen=True)
class Partition:
    blocks: tuple
    n: int

    def __post_init__(self):
        blocks = tuple(tuple(sorted(block)) for block in self.blocks)
        if any(not block for block in blocks):
            raise JetInputError('Partition blocks must be nonempty')
        elements = sorted(e for block in blocks for e in block)
        if elements != list(range(1, self.n + 1)):
            raise JetInputError(
                f'Blocks {blocks} do not partition {{1, ..., {self.n}}}'
            )
        object.__setattr__(self, 'blocks', tuple(sorted(blocks, key=max)))

    @classmethod
    def parse(cls, text):
        """Read ``"2|13"``, or the comma form ``"2|1,13"`` used once n > 9."""
        chunks = text.strip().split('|')
        if any(not chunk for chunk in chunks):
            raise JetInputError(f'Empty block in partition {text!r}')
        try:
            if ',' not in text:
                # digit runs first; a bare "1|2|...|10" only reads as whole numbers
                try:
                    return cls._from_blocks([tuple(int(d) for d in chunk) for chunk in chunks])
                except JetInputError:
                    pass
            return cls._from_blocks([tuple(int(e) for e in chunk.split(',')) for chunk in chunks])
        except ValueError:
            raise JetInputError(f'Malformed partition {text!r}') from None

    @classmethod
    def _from_blocks(cls, blocks):
        return cls(tuple(blocks), sum(len(block) for block in blocks))

    @property
    def length(self):
        return len(self.blocks)

    @property
    def sizes(self):
        return tuple(len(block) for block in self.blocks)

    def is_canonical(self):
        maxima = [max(block) for block in self.blocks]
        return all(a < b for a, b in zip(maxima, maxima[1:]))

    def transport(self, target):
        """Blocks relabelled through the increasing bijection {1..n} -> ``target``."""
        target = tuple(sorted(target))
        if len(target) != self.n:
            raise JetInputError(f'Cannot transport a partition of {self.n} onto {target}')
        return tuple(tuple(target[e - 1] for e in block) for block in self.blocks)

    def __str__(self):
        if self.n <= 9:
            return '|'.join(''.join(str(e) for e in block) for block in self.blocks)
        return '|'.join(','.join(str(e) for e in block) for block in self.blocks)


def _check_size(n):
    limit = conf.max_partition_size()
    if n < 1 or n > limit:
        raise JetInputError(f'Partition size must satisfy 1 <= n <= {limit}, got {n}')


def _set_partitions(elements):
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for partial in _set_partitions(rest):
        yield [[first]] + partial
        for index in range(len(partial)):
            yield partial[:index] + [[first] + partial[index]] + partial[index + 1:]


@lru_cache(maxsize=None)
def _enumerate(n):
    found = [Partition(tuple(tuple(b) for b in blocks), n)
             for blocks in _set_partitions(list(range(1, n + 1)))]
    return tuple(sorted(found, key=str))


def enumerate_partitions(n):
    """All of P_n, canonical, sorted by serialized form."""
    _check_size(n)
    return list(_enumerate(n))


def _check_composition(sizes):
    sizes = tuple(sizes)
    if not sizes or any(not isinstance(i, int) or i < 1 for i in sizes):
        raise JetInputError(f'A composition needs positive parts, got {sizes}')
    return sizes


def _with_sizes(remaining, sizes):
    # the last block always holds the largest remaining element
    if not sizes:
        yield ()
        return
    top, others = remaining[-1], remaining[:-1]
    for chosen in combinations(others, sizes[-1] - 1):
        block = chosen + (top,)
        rest = tuple(e for e in others if e not in chosen)
        for head in _with_sizes(rest, sizes[:-1]):
            yield head + (block,)


def partitions_with_sizes(n, sizes):
    """All partitions in P_n whose block cardinalities are ``sizes``."""
    sizes = _check_composition(sizes)
    if sum(sizes) != n:
        raise JetInputError(f'Composition {sizes} does not sum to {n}')
    _check_size(n)
    found = [Partition(blocks, n) for blocks in _with_sizes(tuple(range(1, n + 1)), sizes)]
    return sorted(found, key=str)


@lru_cache(maxsize=None)
def _count(sizes):
    total = 1
    running = 0
    for size in sizes:
        running += size
        total *= binomial(running - 1, size - 1)
    return total


def count_with_sizes(sizes):
    """N_(i_1, ..., i_l): the number of partitions with the given block sizes."""
    return _count(_check_composition(sizes))


def derived_partitions(partition):
    """lambda^[0], ..., lambda^[l]: shift up by one, then adjoin 1."""
    shifted = [tuple(e + 1 for e in block) for block in partition.blocks]
    n = partition.n + 1
    derived = [Partition(((1,),) + tuple(shifted), n)]
    for m in range(len(shifted)):
        blocks = list(shifted)
        blocks[m] = (1,) + blocks[m]
        derived.append(Partition(tuple(blocks), n))
    return derived


def parent_partition(partition):
    """The unique partition of {1..n} that ``partition`` is derived from."""
    if partition.n < 2:
        raise JetInputError('Only partitions of {1, ..., n+1} with n >= 1 have a parent')
    blocks = []
    for block in partition.blocks:
        kept = tuple(e - 1 for e in block if e != 1)
        if kept:
            blocks.append(kept)
    return Partition(tuple(blocks), partition.n - 1)


def compositions(n):
    """All compositions of ``n`` (ordered tuples of positive parts), lexicographic."""
    if n < 1:
        raise JetInputError(f'compositions() needs n >= 1, got {n}')
    return _compositions(n)


@lru_cache(maxsize=None)
def _compositions(n):
    if n == 0:
        return ((),)
    return tuple(
        (first,) + rest
        for first in range(1, n + 1)
        for rest in _compositions(n - first)
    )
