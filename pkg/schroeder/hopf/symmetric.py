"""
Commutative Variant
===================

The symmetric algebra S(T+(V)) over words, where bars commute. Elements are
TensorElements with ``commutative=True``; each slot holds a sorted multiset
of words (a CommMonomial).
"""

import logging
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict

from ..combinatorics.trees import enum_schroder, enumerate_k_linearizations, sector_blocks, skeleton
from ..errors import DomainError, RankMismatchError
from .coproduct import restrict, split
from .tensor import UNIT, BarMonomial, Key, TensorElement, Word, apply_to_slot, as_element, make_word

logger = logging.getLogger(__name__)

CommMonomial = BarMonomial


def comm_monomial(words) -> CommMonomial:
    """Canonical (sorted) multiset of words."""
    return tuple(sorted(make_word(w) for w in words))


def commutative_projection(x) -> TensorElement:
    """Forget the order of the bars in every slot."""
    x = as_element(x)
    return TensorElement(x.rank, dict(x.items()), commutative=True)


def sym_reduced_coproduct(w: Word) -> TensorElement:
    """Delta-bar_S(w) = sum over nonempty proper A of w_A (x) w~^(A)."""
    w = make_word(w)
    n = len(w)
    counts: Dict[Key, int] = defaultdict(int)
    for r in range(1, n):
        for subset in combinations(range(1, n + 1), r):
            counts[((restrict(w, subset),), split(w, subset))] += 1
    return TensorElement(2, counts, commutative=True)


@lru_cache(maxsize=None)
def _sym_word_coproduct(w: Word) -> TensorElement:
    n = len(w)
    counts: Dict[Key, int] = defaultdict(int)
    for r in range(n + 1):
        for subset in combinations(range(1, n + 1), r):
            left = (restrict(w, subset),) if subset else UNIT
            counts[(left, split(w, subset))] += 1
    return TensorElement(2, counts, commutative=True)


@lru_cache(maxsize=None)
def _sym_monomial_coproduct(monomial: CommMonomial) -> TensorElement:
    result = TensorElement.unit(2, commutative=True)
    for word in monomial:
        result = result * _sym_word_coproduct(word)
    return result


def sym_coproduct(x) -> TensorElement:
    """Coproduct of S(T+(V)), multiplicative over the commutative product."""
    x = commutative_projection(x)
    if x.rank != 1:
        raise RankMismatchError(f"sym_coproduct acts on rank-1 elements, got rank {x.rank}")
    total = TensorElement.zero(2, commutative=True)
    for (monomial,), coeff in x.items():
        total = total + _sym_monomial_coproduct(monomial) * coeff
    return total


@lru_cache(maxsize=None)
def _sym_reduced_monomial(monomial: CommMonomial) -> TensorElement:
    if not monomial:
        return TensorElement.zero(2, commutative=True)
    full = _sym_monomial_coproduct(monomial)
    return TensorElement(2, {k: c for k, c in full.items() if k[0] and k[1]}, commutative=True)


def sym_iterated_recursive(w: Word, k: int) -> TensorElement:
    """Delta-bar_S^[k] by nesting the reduced commutative coproduct."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    result = commutative_projection(TensorElement.from_word(w))
    for _ in range(k - 1):
        result = apply_to_slot(result, result.rank - 1, _sym_reduced_monomial, 2)
    return result


def sym_iterated(w: Word, k: int) -> TensorElement:
    """
    Delta-bar_S^[k](w) as a sum over Schroeder trees and k-linearizations
    of their (non-planar) skeleton; slot j holds the product of the blocks
    on level j.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    w = make_word(w)
    counts: Dict[Key, int] = defaultdict(int)
    if k > len(w):
        return TensorElement.zero(k, commutative=True)
    for t in enum_schroder(len(w)):
        blocks = sector_blocks(t)
        for f in enumerate_k_linearizations(skeleton(t), k):
            key = tuple(
                comm_monomial(restrict(w, blocks[v]) for v in f.vertices_at(level))
                for level in range(1, k + 1)
            )
            counts[key] += 1
    return TensorElement(k, counts, commutative=True)


@lru_cache(maxsize=None)
def _sym_antipode_word(w: Word) -> TensorElement:
    counts: Dict[Key, int] = defaultdict(int)
    for t in enum_schroder(len(w)):
        monomial = comm_monomial(restrict(w, block) for block in sector_blocks(t))
        counts[(monomial,)] += (-1) ** t.internal_count
    return TensorElement(1, counts, commutative=True)


def sym_antipode(x) -> TensorElement:
    """
    S_S(w) = sum_t (-1)^{i(t)} w~_t, extended multiplicatively.

    Args:
        x: Word, bar monomial or rank-1 element (read commutatively)

    Returns:
        Commutative rank-1 element
    """
    x = commutative_projection(x)
    if x.rank != 1:
        raise RankMismatchError(f"sym_antipode acts on rank-1 elements, got rank {x.rank}")
    acc: Dict[Key, Fraction] = defaultdict(Fraction)
    for (monomial,), coeff in x.items():
        image = TensorElement.unit(commutative=True)
        for word in monomial:
            image = image * _sym_antipode_word(word)
        for key, c in image.items():
            acc[key] += coeff * c
    return TensorElement(1, acc, commutative=True)
