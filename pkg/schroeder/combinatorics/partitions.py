"""
Partitions
==========

Set, non-crossing, interval and monotone partitions of [n], their Moebius
functions, nesting forests, and the map t -> pi(t) from Schroeder trees.

Partitions are stored canonically: each block ascending, blocks ordered by
their minimum. Comparisons are structural on that canonical form.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, product
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from ..config import config
from ..errors import DomainError, OrderError, PartitionParseError, SizeLimitError
from .trees import (
    Address,
    Block,
    Linearization,
    SchroederTree,
    SkeletonPoset,
    enum_schroder,
    enumerate_k_linearizations,
    is_prime,
    sector_blocks,
    skeleton,
    standardize_linearization,
    tree_factorial,
    vertex_index,
)

logger = logging.getLogger(__name__)


def _partition_cap(cap: Optional[int]) -> int:
    return cap if cap is not None else int(config.get('enumeration.max_partition_size', 12))


def _check_size(what: str, n: int, cap: Optional[int]):
    if n < 0:
        raise DomainError(f"{what}: n must be non-negative, got {n}")
    limit = _partition_cap(cap)
    if n > limit:
        raise SizeLimitError(what, n, limit)


@dataclass(frozen=True)
class SetPartition:
    """Partition of [n] = {1, ..., n} into nonempty blocks."""

    n: int
    blocks: Tuple[Block, ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        if any(not b for b in blocks):
            raise DomainError("empty block")
        elements = sorted(x for b in blocks for x in b)
        if elements != list(range(1, self.n + 1)):
            raise DomainError(f"blocks {[list(b) for b in blocks]} do not partition [1..{self.n}]")
        object.__setattr__(self, 'blocks', blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    @cached_property
    def labels(self) -> Tuple[int, ...]:
        """labels[i - 1] is the index of the block holding i."""
        label = [0] * self.n
        for index, block in enumerate(self.blocks):
            for x in block:
                label[x - 1] = index
        return tuple(label)

    def block_of(self, i: int) -> Block:
        if not 1 <= i <= self.n:
            raise DomainError(f"{i} is not in [1..{self.n}]")
        return self.blocks[self.labels[i - 1]]

    @property
    def is_interval(self) -> bool:
        return all(b[-1] - b[0] + 1 == len(b) for b in self.blocks)

    @property
    def is_noncrossing(self) -> bool:
        # between consecutive elements x < y of a block, every block met must stay inside (x, y)
        for block in self.blocks:
            for x, y in zip(block, block[1:]):
                for z in range(x + 1, y):
                    inner = self.block_of(z)
                    if inner[0] < x or inner[-1] > y:
                        return False
        return True

    def serialize(self) -> str:
        return '{' + '|'.join(','.join(str(x) for x in b) for b in self.blocks) + '}'

    def __str__(self) -> str:
        return self.serialize()


class NcPartition(SetPartition):
    """Non-crossing partition of [n]."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_noncrossing:
            raise DomainError(f"{self.serialize()} is crossing")


def zero_partition(n: int) -> NcPartition:
    """0_n, all singletons."""
    return NcPartition(n, tuple((i,) for i in range(1, n + 1)))


def one_partition(n: int) -> NcPartition:
    """1_n, a single block."""
    return NcPartition(n, (tuple(range(1, n + 1)),) if n else ())


def parse_partition(text: str) -> NcPartition:
    """Read ``{1,5,6|2,3|4}``; the ground set is [largest element]."""
    body = text.strip()
    if len(body) < 2 or body[0] != '{' or body[-1] != '}':
        raise PartitionParseError(f"partition must be wrapped in braces: {text!r}")
    body = body[1:-1].strip()
    if not body:
        return NcPartition(0, ())
    blocks = []
    for chunk in body.split('|'):
        try:
            blocks.append(tuple(int(x) for x in chunk.split(',')))
        except ValueError:
            raise PartitionParseError(f"bad block {chunk!r} in {text!r}") from None
    n = max(x for b in blocks for x in b)
    return NcPartition(n, tuple(blocks))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _nc_block_lists(lo: int, hi: int) -> Tuple[Tuple[Block, ...], ...]:
    """Non-crossing partitions of {lo, ..., hi} as raw block tuples."""
    if lo > hi:
        return ((),)
    found = []
    rest = range(lo + 1, hi + 1)
    for r in range(len(rest) + 1):
        for chosen in combinations(rest, r):
            block = (lo,) + chosen
            bounds = block + (hi + 1,)
            gaps = [_nc_block_lists(a + 1, b - 1) for a, b in zip(bounds, bounds[1:])]
            for parts in product(*gaps):
                found.append((block,) + tuple(b for part in parts for b in part))
    return tuple(found)


@lru_cache(maxsize=None)
def _enum_nc(n: int) -> Tuple[NcPartition, ...]:
    partitions = sorted((NcPartition(n, blocks) for blocks in _nc_block_lists(1, n)),
                        key=lambda p: p.blocks)
    logger.debug(f"Enumerated {len(partitions)} non-crossing partitions of [{n}]")
    return tuple(partitions)


def enum_nc(n: int, cap: Optional[int] = None) -> List[NcPartition]:
    """NC(n), sorted by canonical block lists."""
    _check_size("enum_nc", n, cap)
    return list(_enum_nc(n))


def enum_interval(n: int, cap: Optional[int] = None) -> List[NcPartition]:
    """NCInt(n): partitions into runs of consecutive integers."""
    _check_size("enum_interval", n, cap)
    if n == 0:
        return [NcPartition(0, ())]
    found = []
    # a cut after i for each i in the chosen subset of [1..n-1]
    for r in range(n):
        for cuts in combinations(range(1, n), r):
            bounds = (0,) + cuts + (n,)
            blocks = tuple(tuple(range(a + 1, b + 1)) for a, b in zip(bounds, bounds[1:]))
            found.append(NcPartition(n, blocks))
    return sorted(found, key=lambda p: p.blocks)


def enum_set_partitions(n: int, cap: Optional[int] = None) -> List[SetPartition]:
    """Pi(n), all set partitions (restricted growth strings)."""
    _check_size("enum_set_partitions", n, cap)
    found = []

    def grow(prefix: List[int], blocks: int):
        if len(prefix) == n:
            groups: Dict[int, List[int]] = {}
            for i, label in enumerate(prefix, start=1):
                groups.setdefault(label, []).append(i)
            found.append(SetPartition(n, tuple(tuple(g) for g in groups.values())))
            return
        for label in range(blocks + 1):
            grow(prefix + [label], max(blocks, label + 1))

    grow([], 0)
    return sorted(found, key=lambda p: p.blocks)


# ---------------------------------------------------------------------------
# Order and Moebius functions
# ---------------------------------------------------------------------------

def is_refinement(p: SetPartition, s: SetPartition) -> bool:
    """p <= s in reverse refinement: every block of p lies inside a block of s."""
    if p.n != s.n:
        return False
    return all(len({s.labels[x - 1] for x in block}) == 1 for block in p.blocks)


def moebius_partition_lattice(p: SetPartition, s: SetPartition) -> int:
    """
    Closed-form Moebius function of the full partition lattice.

    mu(p, s) = (-1)^(|p| - |s|) * prod_{B in s} (n_B - 1)!, where n_B counts
    the blocks of p inside B.
    """
    if not is_refinement(p, s):
        raise OrderError(f"{p} is not finer than {s}")
    inside = Counter(s.labels[block[0] - 1] for block in p.blocks)
    value = (-1) ** (len(p) - len(s))
    for index in range(len(s)):
        value *= factorial(inside[index] - 1)
    return value


@lru_cache(maxsize=None)
def _moebius_from(p: NcPartition) -> Dict[NcPartition, int]:
    """mu(p, q) for every q >= p in NC(n), by the defining recursion."""
    upset = [q for q in _enum_nc(p.n) if is_refinement(p, q)]
    # finer partitions first: every r < q has strictly more blocks than q
    upset.sort(key=lambda q: (-len(q), q.blocks))
    values: Dict[NcPartition, int] = {}
    for q in upset:
        if q == p:
            values[q] = 1
            continue
        values[q] = -sum(mu for r, mu in values.items() if is_refinement(r, q))
    return values


def moebius_nc(p: NcPartition, s: NcPartition) -> int:
    """
    Moebius function of NC(n) on the interval [p, s].

    Raises:
        OrderError: when p is not finer than s, or either one is crossing
    """
    if not is_refinement(p, s):
        raise OrderError(f"{p} is not finer than {s}")
    for x in (p, s):
        if not isinstance(x, NcPartition) and not x.is_noncrossing:
            raise OrderError(f"{x} is crossing, so it is not in NC({x.n})")
    if not isinstance(p, NcPartition):
        p = NcPartition(p.n, p.blocks)
    if not isinstance(s, NcPartition):
        s = NcPartition(s.n, s.blocks)
    return _moebius_from(p)[s]


def hat_extension(p: NcPartition) -> NcPartition:
    """Prepend a singleton {1} and shift every other element up by one."""
    shifted = tuple(tuple(x + 1 for x in block) for block in p.blocks)
    return NcPartition(p.n + 1, ((1,),) + shifted)


# ---------------------------------------------------------------------------
# Nesting forests and monotone partitions
# ---------------------------------------------------------------------------

def is_nested(inner: Block, outer: Block) -> bool:
    """inner is nested in outer: min outer <= x <= max outer for all x in inner."""
    return inner != outer and outer[0] <= inner[0] and inner[-1] <= outer[-1]


@dataclass(frozen=True)
class NestingTree:
    """Node of a nesting forest; children ordered by block minimum."""

    block: Block
    children: Tuple['NestingTree', ...] = ()

    @property
    def size(self) -> int:
        return 1 + sum(child.size for child in self.children)

    def to_poset(self) -> SkeletonPoset:
        return _forest_poset((self,))


@dataclass(frozen=True)
class NestingForest:
    """Nesting hierarchy of the blocks of a non-crossing partition."""

    n: int
    roots: Tuple[NestingTree, ...]

    @property
    def size(self) -> int:
        return sum(root.size for root in self.roots)

    @property
    def is_tree(self) -> bool:
        return len(self.roots) == 1

    def to_poset(self) -> SkeletonPoset:
        return _forest_poset(self.roots)

    def serialize(self) -> str:
        def show(node: NestingTree) -> str:
            label = '{' + ','.join(str(x) for x in node.block) + '}'
            if not node.children:
                return label
            return label + '[' + ' '.join(show(c) for c in node.children) + ']'

        return ' '.join(show(root) for root in self.roots)


def _forest_poset(roots: Sequence[NestingTree]) -> SkeletonPoset:
    parents: List[int] = []
    labels: List[Block] = []

    def visit(node: NestingTree, parent: int):
        index = len(parents)
        parents.append(parent)
        labels.append(node.block)
        for child in node.children:
            visit(child, index)

    for root in roots:
        visit(root, -1)
    return SkeletonPoset(tuple(parents), tuple(labels))


def nesting_parents(p: NcPartition) -> Dict[Block, Optional[Block]]:
    """Immediate nesting parent of each block (None for outer blocks)."""
    parents: Dict[Block, Optional[Block]] = {}
    for block in p.blocks:
        holders = [outer for outer in p.blocks if is_nested(block, outer)]
        # holders form a chain; the innermost starts last
        parents[block] = max(holders, key=lambda b: b[0]) if holders else None
    return parents


def nesting_forest(p: NcPartition) -> NestingForest:
    parents = nesting_parents(p)

    def build(block: Block) -> NestingTree:
        kids = sorted((b for b, parent in parents.items() if parent == block), key=lambda b: b[0])
        return NestingTree(block, tuple(build(k) for k in kids))

    roots = sorted((b for b, parent in parents.items() if parent is None), key=lambda b: b[0])
    return NestingForest(p.n, tuple(build(r) for r in roots))


def forest_factorial(f: NestingForest) -> int:
    """f! = t_1! ... t_m!"""
    result = 1
    for root in f.roots:
        result *= tree_factorial(root)
    return result


def irreducible_components(p: NcPartition) -> List[NcPartition]:
    """
    One component per outer block: the block with everything nested in it.

    Components cover consecutive intervals of [n]; each is returned relabelled
    onto [1..size] preserving order.
    """
    components = []
    for root in nesting_forest(p).roots:
        lo = root.block[0]
        members = [b for b in p.blocks if b == root.block or is_nested(b, root.block)]
        size = root.block[-1] - lo + 1
        components.append(NcPartition(size, tuple(tuple(x - lo + 1 for x in b) for b in members)))
    return components


@dataclass(frozen=True)
class MonotonePartition:
    """Non-crossing partition with a block order that puts outer blocks first."""

    n: int
    ordered_blocks: Tuple[Block, ...]

    def __post_init__(self):
        ordered = tuple(tuple(sorted(b)) for b in self.ordered_blocks)
        object.__setattr__(self, 'ordered_blocks', ordered)
        underlying = NcPartition(self.n, ordered)
        position = {b: i for i, b in enumerate(ordered)}
        for inner in ordered:
            for outer in underlying.blocks:
                if is_nested(inner, outer) and position[outer] > position[inner]:
                    raise DomainError(f"block {inner} is listed before {outer}, which it is nested in")

    @property
    def underlying(self) -> NcPartition:
        return NcPartition(self.n, self.ordered_blocks)

    def __len__(self) -> int:
        return len(self.ordered_blocks)

    def serialize(self) -> str:
        return '[' + ' ; '.join(','.join(str(x) for x in b) for b in self.ordered_blocks) + ']'

    def __str__(self) -> str:
        return self.serialize()


def parse_monotone_partition(text: str) -> MonotonePartition:
    """Read ``[1,5,6 ; 2,3 ; 4]``."""
    body = text.strip()
    if len(body) < 2 or body[0] != '[' or body[-1] != ']':
        raise PartitionParseError(f"monotone partition must be wrapped in brackets: {text!r}")
    body = body[1:-1].strip()
    if not body:
        return MonotonePartition(0, ())
    blocks = []
    for chunk in body.split(';'):
        try:
            blocks.append(tuple(int(x) for x in chunk.split(',')))
        except ValueError:
            raise PartitionParseError(f"bad block {chunk!r} in {text!r}") from None
    return MonotonePartition(max(x for b in blocks for x in b), tuple(blocks))


def linear_extensions(f: NestingForest) -> List[Tuple[Block, ...]]:
    """Block orders compatible with the nesting forest."""
    poset = f.to_poset()
    if poset.size == 0:
        return [()]
    orders = []
    for g in enumerate_k_linearizations(poset, poset.size):
        order = sorted(poset.vertices, key=lambda v: g.levels[v])
        orders.append(tuple(poset.labels[v] for v in order))
    return orders


def enum_monotone(n: int, cap: Optional[int] = None) -> List[MonotonePartition]:
    """All monotone partitions of [n]."""
    _check_size("enum_monotone", n, cap)
    found = []
    for p in _enum_nc(n):
        for order in linear_extensions(nesting_forest(p)):
            found.append(MonotonePartition(n, order))
    return found


# ---------------------------------------------------------------------------
# Trees to partitions
# ---------------------------------------------------------------------------

def tree_to_ncp(t: SchroederTree) -> NcPartition:
    """pi(t): one block per internal vertex, the labels of the sectors it roots."""
    if t.is_leaf:
        raise DomainError("tree_to_ncp needs a tree of degree >= 1")
    return NcPartition(t.degree, sector_blocks(t))


def block_of_root(t: SchroederTree) -> Block:
    if t.is_leaf:
        raise DomainError("block_of_root needs a tree of degree >= 1")
    return sector_blocks(t)[0]


def subtree_blocks(t: SchroederTree, v: Address) -> List[Block]:
    """Blocks of the internal vertex v and of all its internal descendants."""
    index = vertex_index(t, v)
    poset = skeleton(t)
    blocks = sector_blocks(t)
    found = [blocks[w] for w in poset.vertices if w == index or poset.is_below(index, w)]
    return sorted(found)


def tree_monotone_partition(t: SchroederTree, f: Linearization) -> MonotonePartition:
    """pi(t, f-bar): the blocks of pi(t) ordered by the standardized linearization."""
    poset = skeleton(t)
    g = standardize_linearization(poset, f)
    blocks = sector_blocks(t)
    order = sorted(poset.vertices, key=lambda v: g.levels[v])
    return MonotonePartition(t.degree, tuple(blocks[v] for v in order))


@lru_cache(maxsize=None)
def _trees_per_ncp(n: int, prime_only: bool) -> Counter:
    counts: Counter = Counter()
    for t in enum_schroder(n):
        if prime_only and not is_prime(t):
            continue
        counts[tree_to_ncp(t)] += 1
    return counts


def count_trees_for_ncp(p: NcPartition) -> int:
    """|{t in Sch(n) : pi(t) = p}|"""
    if p.n < 1:
        raise DomainError("count_trees_for_ncp needs n >= 1")
    return _trees_per_ncp(p.n, False)[_as_nc(p)]


def count_prime_trees_for_ncp(p: NcPartition) -> int:
    """|{t in PSch(n) : pi(t) = p}|"""
    if p.n < 1:
        raise DomainError("count_prime_trees_for_ncp needs n >= 1")
    return _trees_per_ncp(p.n, True)[_as_nc(p)]


def _as_nc(p: SetPartition) -> NcPartition:
    return p if isinstance(p, NcPartition) else NcPartition(p.n, p.blocks)