"""
Schroeder Trees
===============

Planar rooted trees whose internal vertices have at least two children,
their skeleton posets, k-linearizations and Murua coefficients.

Internal vertices are addressed two ways: by their child-index path from the
root (``()`` is the root) and by their position in the planar order, i.e. the
pre-order traversal root-then-children-left-to-right. Skeleton posets index
vertices by planar position, so ``planar_rank(v) == v + 1``.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Any, Iterator, List, Optional, Sequence, Tuple

from ..config import config
from ..errors import DomainError, SizeLimitError, TreeParseError

logger = logging.getLogger(__name__)

Address = Tuple[int, ...]
Block = Tuple[int, ...]


@dataclass(frozen=True)
class SchroederTree:
    """Planar rooted tree; an empty ``children`` tuple is a leaf."""

    children: Tuple['SchroederTree', ...] = ()

    def __post_init__(self):
        children = tuple(self.children)
        if len(children) == 1:
            raise DomainError("internal vertex with a single child")
        for child in children:
            if not isinstance(child, SchroederTree):
                raise DomainError(f"child is not a SchroederTree: {child!r}")
        object.__setattr__(self, 'children', children)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @cached_property
    def num_leaves(self) -> int:
        if self.is_leaf:
            return 1
        return sum(child.num_leaves for child in self.children)

    @property
    def degree(self) -> int:
        return self.num_leaves - 1

    @cached_property
    def internal_count(self) -> int:
        """i(t), the number of internal vertices."""
        if self.is_leaf:
            return 0
        return 1 + sum(child.internal_count for child in self.children)

    @property
    def is_corolla(self) -> bool:
        return not self.is_leaf and all(child.is_leaf for child in self.children)

    @cached_property
    def serialized(self) -> str:
        if self.is_leaf:
            return 'o'
        return '(' + ','.join(child.serialized for child in self.children) + ')'

    def subtree(self, address: Address) -> 'SchroederTree':
        node = self
        for index in address:
            if index < 0 or index >= len(node.children):
                raise DomainError(f"no vertex at address {address}")
            node = node.children[index]
        return node

    def __str__(self) -> str:
        return self.serialized


LEAF = SchroederTree()


def corolla(n: int) -> SchroederTree:
    """The degree-n tree with a single internal vertex."""
    if n < 1:
        raise DomainError(f"corolla needs degree >= 1, got {n}")
    return SchroederTree((LEAF,) * (n + 1))


def serialize_tree(t: SchroederTree) -> str:
    return t.serialized


def parse_tree(text: str) -> SchroederTree:
    """
    Parse the nested-parenthesis grammar ``o`` / ``(child,child,...)``.

    Whitespace is ignored.

    Raises:
        TreeParseError: on malformed input, with the offending position
    """
    tokens = [(i, ch) for i, ch in enumerate(text) if not ch.isspace()]
    pos = 0

    def peek() -> Tuple[int, Optional[str]]:
        if pos < len(tokens):
            return tokens[pos]
        return len(text), None

    def node() -> SchroederTree:
        nonlocal pos
        where, ch = peek()
        if ch == 'o':
            pos += 1
            return LEAF
        if ch != '(':
            found = 'end of input' if ch is None else repr(ch)
            raise TreeParseError(f"expected 'o' or '(' but found {found}", text, where)
        pos += 1
        children = [node()]
        while True:
            where, ch = peek()
            if ch == ',':
                pos += 1
                children.append(node())
            elif ch == ')':
                pos += 1
                break
            else:
                found = 'end of input' if ch is None else repr(ch)
                raise TreeParseError(f"expected ',' or ')' but found {found}", text, where)
        if len(children) < 2:
            raise TreeParseError("internal vertex needs at least two children", text, where)
        return SchroederTree(tuple(children))

    tree = node()
    where, ch = peek()
    if ch is not None:
        raise TreeParseError(f"trailing input {ch!r}", text, where)
    return tree


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _tree_cap(cap: Optional[int]) -> int:
    return cap if cap is not None else int(config.get('enumeration.max_degree', 10))


def _compositions(total: int, min_parts: int) -> Iterator[Tuple[int, ...]]:
    """Compositions of ``total`` into at least ``min_parts`` positive parts."""
    def extend(remaining: int, prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            if len(prefix) >= min_parts:
                yield prefix
            return
        for part in range(1, remaining + 1):
            yield from extend(remaining - part, prefix + (part,))

    yield from extend(total, ())


@lru_cache(maxsize=None)
def _trees_with_leaves(leaves: int) -> Tuple[SchroederTree, ...]:
    if leaves == 1:
        return (LEAF,)
    trees = []
    for parts in _compositions(leaves, 2):
        for children in product(*(_trees_with_leaves(p) for p in parts)):
            trees.append(SchroederTree(children))
    return tuple(trees)


@lru_cache(maxsize=None)
def _sorted_trees(n: int) -> Tuple[SchroederTree, ...]:
    trees = tuple(sorted(_trees_with_leaves(n + 1), key=serialize_tree))
    logger.debug(f"Enumerated {len(trees)} Schroeder trees of degree {n}")
    return trees


def enum_schroder(n: int, cap: Optional[int] = None) -> List[SchroederTree]:
    """
    All Schroeder trees of degree n, in canonical string order.

    Args:
        n: Degree (number of leaves minus one)
        cap: Largest admissible degree (default: enumeration.max_degree)

    Returns:
        List of trees; Sch(0) holds the single-vertex tree
    """
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")
    limit = _tree_cap(cap)
    if n > limit:
        raise SizeLimitError("enum_schroder", n, limit)
    return list(_sorted_trees(n))


def enum_schroder_by_k(n: int, k: int, cap: Optional[int] = None) -> List[SchroederTree]:
    """Degree-n trees with exactly k internal vertices."""
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    return [t for t in enum_schroder(n, cap) if t.internal_count == k]


def enum_forests(degrees: Sequence[int], cap: Optional[int] = None) -> Iterator['SchroederForest']:
    """All forests (t_1, ..., t_m) with deg t_i = degrees[i]."""
    for trees in product(*(enum_schroder(d, cap) for d in degrees)):
        yield SchroederForest(tuple(trees))


def is_prime(t: SchroederTree) -> bool:
    """Leftmost subtree of the root is a leaf."""
    if t.is_leaf:
        raise DomainError("is_prime needs a tree of degree >= 1")
    return t.children[0].is_leaf


def is_boolean(t: SchroederTree) -> bool:
    """Every internal vertex has only leaf children, except possibly the leftmost."""
    if t.is_leaf:
        raise DomainError("is_boolean needs a tree of degree >= 1")
    node = t
    while not node.is_leaf:
        if any(not child.is_leaf for child in node.children[1:]):
            return False
        node = node.children[0]
    return True


# ---------------------------------------------------------------------------
# Skeleton posets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SkeletonPoset:
    """
    Rooted forest poset, vertices listed in planar (pre-)order.

    ``parents[v]`` is the index of the parent of v, or -1 for a root; parents
    always precede their children. ``labels`` carries whatever the vertices
    stand for (tree addresses, partition blocks).
    """

    parents: Tuple[int, ...]
    labels: Tuple[Any, ...] = field(default=(), compare=False)

    def __post_init__(self):
        for v, parent in enumerate(self.parents):
            if not -1 <= parent < v:
                raise DomainError(f"vertex {v} has parent {parent}; parents must come first")

    @property
    def size(self) -> int:
        return len(self.parents)

    @property
    def vertices(self) -> range:
        return range(len(self.parents))

    def parent(self, v: int) -> Optional[int]:
        p = self.parents[v]
        return None if p < 0 else p

    def planar_rank(self, v: int) -> int:
        return v + 1

    @cached_property
    def children(self) -> Tuple[Tuple[int, ...], ...]:
        kids: List[List[int]] = [[] for _ in self.parents]
        for v, p in enumerate(self.parents):
            if p >= 0:
                kids[p].append(v)
        return tuple(tuple(k) for k in kids)

    @property
    def roots(self) -> Tuple[int, ...]:
        return tuple(v for v, p in enumerate(self.parents) if p < 0)

    @cached_property
    def depths(self) -> Tuple[int, ...]:
        depth: List[int] = []
        for p in self.parents:
            depth.append(0 if p < 0 else depth[p] + 1)
        return tuple(depth)

    @property
    def height(self) -> int:
        """Edges on the longest root-to-vertex chain."""
        return max(self.depths, default=0)

    def is_below(self, v: int, w: int) -> bool:
        """True when v is a proper ancestor of w."""
        p = self.parents[w]
        while p >= 0:
            if p == v:
                return True
            p = self.parents[p]
        return False


@dataclass(frozen=True)
class _TreeWalk:
    poset: SkeletonPoset
    blocks: Tuple[Block, ...]


@lru_cache(maxsize=4096)
def _walk(t: SchroederTree) -> _TreeWalk:
    parents: List[int] = []
    addresses: List[Address] = []
    blocks: List[Block] = []
    leaves_seen = 0

    def visit(node: SchroederTree, address: Address, parent: int):
        nonlocal leaves_seen
        if node.is_leaf:
            leaves_seen += 1
            return
        index = len(parents)
        parents.append(parent)
        addresses.append(address)
        blocks.append(())
        sectors = []
        last = len(node.children) - 1
        for i, child in enumerate(node.children):
            visit(child, address + (i,), index)
            if i < last:
                # gap between leaf `leaves_seen` and the next one
                sectors.append(leaves_seen)
        blocks[index] = tuple(sectors)

    visit(t, (), -1)
    return _TreeWalk(SkeletonPoset(tuple(parents), tuple(addresses)), tuple(blocks))


def skeleton(t: SchroederTree) -> SkeletonPoset:
    """Poset of internal vertices; labels are their addresses."""
    if t.is_leaf:
        raise DomainError("the single-vertex tree has no skeleton")
    return _walk(t).poset


def planar_order(t: SchroederTree) -> List[Address]:
    """Addresses of internal vertices in planar order."""
    if t.is_leaf:
        return []
    return list(_walk(t).poset.labels)


def sector_blocks(t: SchroederTree) -> Tuple[Block, ...]:
    """
    Sector labels grouped by their root vertex, in planar order.

    Sector i sits between leaf i and leaf i+1; its root is the lowest common
    ancestor of the two leaves.
    """
    if t.is_leaf:
        return ()
    return _walk(t).blocks


def vertex_index(t: SchroederTree, address: Address) -> int:
    """Planar position of the internal vertex at ``address``."""
    poset = skeleton(t)
    try:
        return poset.labels.index(tuple(address))
    except ValueError:
        raise DomainError(f"{tuple(address)} is not an internal vertex of {t}") from None


def tree_factorial(t: Any) -> int:
    """
    Tree factorial t! = |t| * prod t_i! for t = B+(t_1, ..., t_k).

    Accepts anything with a ``children`` attribute (Schroeder trees count their
    leaves as vertices) or a SkeletonPoset, which is read as a forest.
    """
    if isinstance(t, SkeletonPoset):
        sizes = [1] * t.size
        for v in reversed(t.vertices):
            p = t.parents[v]
            if p >= 0:
                sizes[p] += sizes[v]
        result = 1
        for s in sizes:
            result *= s
        return result

    def walk(node) -> Tuple[int, int]:
        size, fact = 1, 1
        for child in node.children:
            s, f = walk(child)
            size += s
            fact *= f
        return size, fact * size

    return walk(t)[1]


# ---------------------------------------------------------------------------
# Linearizations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Linearization:
    """Levels of the vertices of a poset, indexed by planar position."""

    levels: Tuple[int, ...]

    @property
    def k(self) -> int:
        return max(self.levels, default=0)

    def level(self, v: int) -> int:
        return self.levels[v]

    def vertices_at(self, level: int) -> Tuple[int, ...]:
        """Vertices on one level, in planar order."""
        return tuple(v for v, lvl in enumerate(self.levels) if lvl == level)


def as_poset(p: Any) -> SkeletonPoset:
    if isinstance(p, SkeletonPoset):
        return p
    if isinstance(p, SchroederTree):
        return skeleton(p)
    to_poset = getattr(p, 'to_poset', None)
    if callable(to_poset):
        return to_poset()
    raise DomainError(f"cannot read {type(p).__name__} as a poset")


def is_linearization(p: Any, f: Linearization, k: Optional[int] = None) -> bool:
    poset = as_poset(p)
    if len(f.levels) != poset.size:
        return False
    k = f.k if k is None else k
    if set(f.levels) != set(range(1, k + 1)):
        return False
    return all(
        parent < 0 or f.levels[parent] < f.levels[v]
        for v, parent in enumerate(poset.parents)
    )


def _available(poset: SkeletonPoset, done: int) -> List[int]:
    return [
        v for v, parent in enumerate(poset.parents)
        if not (done >> v) & 1 and (parent < 0 or (done >> parent) & 1)
    ]


def enumerate_k_linearizations(p: Any, k: int) -> Iterator[Linearization]:
    """
    Every surjective, strictly order-preserving map onto [k].

    Built level by level: each level takes a nonempty set of vertices whose
    parents already sit on lower levels.
    """
    poset = as_poset(p)
    m = poset.size
    if k < 1 or k > m:
        return
    full = (1 << m) - 1

    def extend(done: int, levels: List[int], level: int) -> Iterator[Linearization]:
        if level > k:
            if done == full:
                yield Linearization(tuple(levels))
            return
        if full & ~done == 0:
            return
        available = _available(poset, done)
        for r in range(1, len(available) + 1):
            for chosen in combinations(available, r):
                mask = 0
                for v in chosen:
                    mask |= 1 << v
                    levels[v] = level
                yield from extend(done | mask, levels, level + 1)
                for v in chosen:
                    levels[v] = 0

    yield from extend(0, [0] * m, 1)


@lru_cache(maxsize=None)
def _count_linearizations(parents: Tuple[int, ...], k: int) -> int:
    poset = SkeletonPoset(parents)
    m = poset.size
    full = (1 << m) - 1

    @lru_cache(maxsize=None)
    def ways(done: int, remaining: int) -> int:
        if done == full:
            return 1 if remaining == 0 else 0
        if remaining == 0 or bin(full & ~done).count('1') < remaining:
            return 0
        available = _available(poset, done)
        total = 0
        for r in range(1, len(available) + 1):
            for chosen in combinations(available, r):
                mask = 0
                for v in chosen:
                    mask |= 1 << v
                total += ways(done | mask, remaining - 1)
        return total

    return ways(0, k)


def count_k_linearizations(p: Any, k: int) -> int:
    """
    Number of k-linearizations of a rooted forest poset.

    Args:
        p: SkeletonPoset, SchroederTree (its skeleton) or nesting tree/forest
        k: Number of levels

    Returns:
        omega_k(p); zero outside height(p)+1 <= k <= |p|
    """
    poset = as_poset(p)
    if k < 1 or k > poset.size:
        return 0
    return _count_linearizations(poset.parents, k)


def count_k_linearizations_bruteforce(p: Any, k: int) -> int:
    """Exhaustive check of every map onto [k]; the oracle for small posets."""
    poset = as_poset(p)
    limit = int(config.get('linearizations.bruteforce_max_vertices', 7))
    if poset.size > limit:
        raise SizeLimitError("count_k_linearizations_bruteforce", poset.size, limit)
    if k < 1:
        return 0
    count = 0
    for levels in product(range(1, k + 1), repeat=poset.size):
        if is_linearization(poset, Linearization(levels), k):
            count += 1
    return count


def standardize_linearization(p: Any, f: Linearization) -> Linearization:
    """
    f-bar: the bijection onto [|p|] that sorts by level, then by planar order.
    """
    poset = as_poset(p)
    order = sorted(poset.vertices, key=lambda v: (f.levels[v], v))
    levels = [0] * poset.size
    for rank, v in enumerate(order, start=1):
        levels[v] = rank
    return Linearization(tuple(levels))


def ascents(p: Any, g: Linearization) -> List[int]:
    """
    Positions j (1-based) where g has an ascent.

    With u_j the vertex that g-bar sends to j, j is an ascent when u_j is not
    the parent of u_{j+1} and u_j comes before u_{j+1} in planar order.
    A k-linearization is read through its standardization.
    """
    poset = as_poset(p)
    bar = standardize_linearization(poset, g)
    by_rank = sorted(poset.vertices, key=lambda v: bar.levels[v])
    found = []
    for j in range(1, poset.size):
        lower, upper = by_rank[j - 1], by_rank[j]
        if poset.parents[upper] != lower and lower < upper:
            found.append(j)
    return found


def is_ascent_free(p: Any, g: Linearization) -> bool:
    return not ascents(p, g)


def mirrored_preorder(poset: SkeletonPoset) -> List[int]:
    """Roots right-to-left, each followed by its subtrees right-to-left."""
    visit: List[int] = []
    stack = list(poset.roots)
    # stack pops the last pushed first, so push left-to-right
    while stack:
        v = stack.pop()
        visit.append(v)
        stack.extend(poset.children[v])
    return visit


def ascent_free_linearization(t: Any) -> Linearization:
    """The unique bijective linearization without ascents."""
    poset = as_poset(t)
    levels = [0] * poset.size
    for level, v in enumerate(mirrored_preorder(poset), start=1):
        levels[v] = level
    return Linearization(tuple(levels))


@lru_cache(maxsize=None)
def _murua(parents: Tuple[int, ...]) -> Fraction:
    total = Fraction(0)
    for k in range(1, len(parents) + 1):
        omega_k = _count_linearizations(parents, k)
        if omega_k:
            total += Fraction((-1) ** (k - 1), k) * omega_k
    return total


def murua_coefficient(p: Any) -> Fraction:
    """omega(p) = sum_k (-1)^(k-1)/k * omega_k(p); Schroeder trees use their skeleton."""
    return _murua(as_poset(p).parents)


# ---------------------------------------------------------------------------
# Forests and grafting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SchroederForest:
    """Ordered sequence of Schroeder trees."""

    trees: Tuple[SchroederTree, ...]

    def __post_init__(self):
        object.__setattr__(self, 'trees', tuple(self.trees))

    @property
    def degree(self) -> int:
        return sum(t.degree for t in self.trees)

    @property
    def internal_count(self) -> int:
        return sum(t.internal_count for t in self.trees)

    def skeleton(self) -> SkeletonPoset:
        """Disjoint union of the skeletons, trees left to right; labels are (tree, address)."""
        parents: List[int] = []
        labels: List[Tuple[int, Address]] = []
        for i, t in enumerate(self.trees):
            if t.is_leaf:
                continue
            sk = skeleton(t)
            offset = len(parents)
            parents.extend(p + offset if p >= 0 else -1 for p in sk.parents)
            labels.extend((i, address) for address in sk.labels)
        return SkeletonPoset(tuple(parents), tuple(labels))

    def __str__(self) -> str:
        return ' '.join(t.serialized for t in self.trees)


def graft_on_root_block(
    n: int,
    root_block: Sequence[int],
    subtrees: Optional[Sequence[SchroederTree]] = None
) -> SchroederTree:
    """
    Tree of degree n whose root carries the sectors ``root_block``.

    The gaps of [n] not in the root block fall into maximal runs; the run K is
    covered by ``subtrees[j]`` (degree |K|), in ascending order of runs.
    Without ``subtrees`` every run gets a corolla, giving the height-two tree
    with root block A.
    """
    block = sorted(set(root_block))
    if not block or block[0] < 1 or block[-1] > n:
        raise DomainError(f"root block {list(root_block)} is not a nonempty subset of [1..{n}]")
    bounds = [0] + block + [n + 1]
    runs = [bounds[j + 1] - bounds[j] - 1 for j in range(len(bounds) - 1)]
    nonempty = [r for r in runs if r > 0]
    if subtrees is None:
        subtrees = [corolla(r) for r in nonempty]
    subtrees = list(subtrees)
    if len(subtrees) != len(nonempty):
        raise DomainError(f"expected {len(nonempty)} subtrees, got {len(subtrees)}")
    children = []
    pending = iter(subtrees)
    for run in runs:
        if run == 0:
            children.append(LEAF)
            continue
        sub = next(pending)
        if sub.degree != run:
            raise DomainError(f"subtree {sub} has degree {sub.degree}, gap needs {run}")
        children.append(sub)
    return SchroederTree(tuple(children))
