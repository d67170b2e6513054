"""
Coproducts
==========

Restriction and splitting of words by position, the coproduct of the double
tensor Hopf algebra, its half-coproducts, reduced and iterated versions, and
the two tree-indexed expansions of the reduced iterated coproduct (one over
Schroeder trees and their linearizations, one over Schroeder forests).

Everything here works by POSITION: repeated letters are never merged until
terms are collected in a TensorElement.
"""

import logging
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..combinatorics.partitions import tree_monotone_partition
from ..combinatorics.trees import (
    enum_forests,
    enum_schroder,
    enumerate_k_linearizations,
    sector_blocks,
    skeleton,
)
from ..errors import DomainError, RankMismatchError
from .tensor import UNIT, BarMonomial, Key, TensorElement, Word, apply_to_slot, as_element

logger = logging.getLogger(__name__)

FULL, LEFT, RIGHT = 'full', 'left', 'right'


def restrict(w: Word, positions: Iterable[int]) -> Word:
    """
    w_I: the letters of w at the positions in I, in increasing position order.

    Returns the empty tuple (the unit) when I is empty.
    """
    index = sorted(set(positions))
    for i in index:
        if not 1 <= i <= len(w):
            raise DomainError(f"position {i} out of range for a word of length {len(w)}")
    return tuple(w[i - 1] for i in index)


def connected_components(inner: Iterable[int], outer: Iterable[int]) -> List[Tuple[int, ...]]:
    """
    Maximal runs of consecutive integers in J \\ I, ordered by minimum.

    Raises:
        DomainError: if I is not a subset of J
    """
    I, J = set(inner), set(outer)
    if not I <= J:
        raise DomainError(f"{sorted(I)} is not a subset of {sorted(J)}")
    components: List[List[int]] = []
    for x in sorted(J - I):
        if components and components[-1][-1] == x - 1:
            components[-1].append(x)
        else:
            components.append([x])
    return [tuple(c) for c in components]


def split(w: Word, inner: Iterable[int], outer: Optional[Iterable[int]] = None) -> BarMonomial:
    """w^(I,J) = w_{K_1}|...|w_{K_r}; J defaults to all positions of w."""
    if outer is None:
        outer = range(1, len(w) + 1)
    outer = list(outer)
    for j in outer:
        if not 1 <= j <= len(w):
            raise DomainError(f"position {j} out of range for a word of length {len(w)}")
    return tuple(restrict(w, k) for k in connected_components(inner, outer))


@lru_cache(maxsize=None)
def _word_terms(w: Word, side: str) -> Tuple[Tuple[Key, int], ...]:
    n = len(w)
    counts: Dict[Key, int] = defaultdict(int)
    for r in range(n + 1):
        for subset in combinations(range(1, n + 1), r):
            first = bool(subset) and subset[0] == 1
            if side == LEFT and not first:
                continue
            if side == RIGHT and first:
                continue
            left = (restrict(w, subset),) if subset else UNIT
            counts[(left, split(w, subset))] += 1
    return tuple(counts.items())


@lru_cache(maxsize=None)
def _monomial_terms(monomial: BarMonomial, side: str) -> Tuple[Tuple[Key, int], ...]:
    if not monomial:
        return (((UNIT, UNIT), 1),) if side == FULL else ()
    current: Dict[Key, int] = {(UNIT, UNIT): 1}
    for position, word in enumerate(monomial):
        word_side = side if position == 0 else FULL
        nxt: Dict[Key, int] = defaultdict(int)
        for (a, b), c in current.items():
            for (x, y), d in _word_terms(word, word_side):
                nxt[(a + x, b + y)] += c * d
        current = nxt
    return tuple(current.items())


def _apply(x, side: str) -> TensorElement:
    x = as_element(x)
    if x.rank != 1:
        raise RankMismatchError(f"coproducts act on rank-1 elements, got rank {x.rank}")
    acc: Dict[Key, Fraction] = defaultdict(Fraction)
    for (monomial,), coeff in x.items():
        for key, count in _monomial_terms(monomial, side):
            acc[key] += coeff * count
    return TensorElement(2, acc)


def coproduct(x) -> TensorElement:
    """
    Delta(w) = sum over I of w_I (x) w^(I), extended multiplicatively.

    Args:
        x: Rank-1 element (or a word / bar monomial)

    Returns:
        Rank-2 element; Delta(1) = 1 (x) 1
    """
    return _apply(x, FULL)


def half_coproduct_left(x) -> TensorElement:
    """Delta_< : subsets containing the first position of the first word."""
    return _apply(x, LEFT)


def half_coproduct_right(x) -> TensorElement:
    """Delta_> : subsets avoiding the first position of the first word."""
    return _apply(x, RIGHT)


@lru_cache(maxsize=None)
def _reduced_monomial(monomial: BarMonomial) -> TensorElement:
    if not monomial:
        return TensorElement.zero(2)
    # the only terms with an empty slot are 1 (x) m and m (x) 1
    return TensorElement(2, {k: c for k, c in _monomial_terms(monomial, FULL) if k[0] and k[1]})


def reduced_coproduct(x) -> TensorElement:
    """Delta-bar = Delta - 1 (x) id - id (x) 1 on the augmentation ideal; zero on the unit."""
    x = as_element(x)
    if x.rank != 1:
        raise RankMismatchError(f"coproducts act on rank-1 elements, got rank {x.rank}")
    acc = TensorElement.zero(2)
    for (monomial,), coeff in x.items():
        acc = acc + _reduced_monomial(monomial) * coeff
    return acc


def iterated_reduced_coproduct(x, k: int) -> TensorElement:
    """
    Delta-bar^[k], nesting (id^(k-2) (x) Delta-bar) o Delta-bar^[k-1].

    Delta-bar^[1] is the projection onto the augmentation ideal.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    result = as_element(x).without_unit()
    for _ in range(k - 1):
        result = apply_to_slot(result, result.rank - 1, _reduced_monomial, 2)
    return result


def iterated_coproduct(x, m: int) -> TensorElement:
    """Delta^[m] (non-reduced), Delta^[1] = id."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    result = as_element(x)
    for _ in range(m - 1):
        result = apply_to_slot(result, result.rank - 1, coproduct, 2)
    return result


def _slot_word_lists(w: Word, ordered_blocks: Sequence[Tuple[int, ...]], sizes: Sequence[int]) -> Key:
    slots = []
    start = 0
    for size in sizes:
        slots.append(tuple(restrict(w, block) for block in ordered_blocks[start:start + size]))
        start += size
    return tuple(slots)


@lru_cache(maxsize=None)
def _schroder_iterated(w: Word, k: int) -> TensorElement:
    counts: Dict[Key, int] = defaultdict(int)
    for t in enum_schroder(len(w)):
        poset = skeleton(t)
        for f in enumerate_k_linearizations(poset, k):
            monotone = tree_monotone_partition(t, f)
            sizes = [len(f.vertices_at(level)) for level in range(1, k + 1)]
            counts[_slot_word_lists(w, monotone.ordered_blocks, sizes)] += 1
    return TensorElement(k, counts)


def schroder_iterated_terms(w: Word, k: int) -> TensorElement:
    """
    Delta-bar^[k](w) as a sum over Schroeder trees t of degree |w| and
    k-linearizations f of their skeleton.

    The blocks of pi(t) are ordered by f-bar; slot j receives, as a bar
    monomial, the restrictions of w to the blocks on level j in planar order.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    w = tuple(w)
    if k > len(w):
        return TensorElement.zero(k)
    return _schroder_iterated(w, k)


def forest_coproduct_terms(monomial: BarMonomial) -> TensorElement:
    """
    Delta-bar(w_1|...|w_m) as a sum over forests F = (t_1, ..., t_m), deg t_i = |w_i|,
    and 2-linearizations h of the forest skeleton.

    The left slot collects, tree by tree, the root block of every tree whose
    root sits on level 1; the right slot collects the level-2 blocks in planar
    order, trees left to right (a corolla on level 2 contributes its whole word).
    """
    monomial = tuple(tuple(w) for w in monomial)
    if not monomial:
        raise DomainError("forest_coproduct_terms needs a nonempty bar monomial")
    counts: Dict[Key, int] = defaultdict(int)
    for forest in enum_forests([len(w) for w in monomial]):
        poset = forest.skeleton()
        owners = [tree_index for tree_index, _ in poset.labels]
        blocks = [block for t in forest.trees for block in sector_blocks(t)]
        for h in enumerate_k_linearizations(poset, 2):
            left, right = [], []
            for v in poset.vertices:
                word = monomial[owners[v]]
                if h.levels[v] == 1:
                    left.append(restrict(word, blocks[v]))
                else:
                    right.append(restrict(word, blocks[v]))
            counts[(tuple(left), tuple(right))] += 1
    return TensorElement(2, counts)
