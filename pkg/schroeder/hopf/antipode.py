"""
Antipodes
=========

Four independent evaluations of the antipode S of the double tensor Hopf
algebra:

- ``schroder``: the cancellation-free sum over Schroeder trees,
  S(w) = sum_t (-1)^{i(t)} w_t with the blocks of pi(t) barred in the order
  of the ascent-free linearization;
- ``takeuchi``: S = sum_k (-1)^k m^[k] o Delta-bar^[k];
- ``bogoliubov``: the recursion S(w) = -w - m o (S (x) id) o Delta-bar(w);
- ``convolution``: S as the convolution inverse of id, sum_k (-1)^k (id - eta eps)^{*k}
  with convolution powers built from the full coproduct.

On bar monomials S is an anti-homomorphism: S(w_1|...|w_m) = S(w_m)|...|S(w_1).
"""

import logging
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict

from ..combinatorics.trees import (
    Linearization,
    SchroederTree,
    ascent_free_linearization,
    enum_schroder,
    is_ascent_free,
    sector_blocks,
    skeleton,
    standardize_linearization,
    enumerate_k_linearizations,
)
from ..errors import DomainError, UnknownMethodError
from .coproduct import _monomial_terms, _reduced_monomial, coproduct, iterated_reduced_coproduct, restrict
from .tensor import BarMonomial, Key, TensorElement, Word, as_element, bar_product, multiply_slots

logger = logging.getLogger(__name__)


def _linear(x, on_monomial: Callable[[BarMonomial], TensorElement]) -> TensorElement:
    x = as_element(x)
    if x.rank != 1:
        raise DomainError(f"the antipode acts on rank-1 elements, got rank {x.rank}")
    acc: Dict[Key, Fraction] = defaultdict(Fraction)
    for (monomial,), coeff in x.items():
        for key, c in on_monomial(monomial).items():
            acc[key] += coeff * c
    return TensorElement(1, acc)


@lru_cache(maxsize=None)
def _schroder_word(w: Word) -> TensorElement:
    counts: Dict[Key, int] = defaultdict(int)
    for t in enum_schroder(len(w)):
        g = ascent_free_linearization(t)
        blocks = sector_blocks(t)
        order = sorted(range(len(blocks)), key=lambda v: g.levels[v])
        counts[(tuple(restrict(w, blocks[v]) for v in order),)] += (-1) ** t.internal_count
    logger.debug(f"Schroeder antipode of a length-{len(w)} word has {len(counts)} terms")
    return TensorElement(1, counts)


def _reverse_product(monomial: BarMonomial, on_word: Callable[[Word], TensorElement]) -> TensorElement:
    result = TensorElement.unit()
    for word in reversed(monomial):
        result = bar_product(result, on_word(word))
    return result


def antipode_schroder(x) -> TensorElement:
    """
    Cancellation-free antipode over Schroeder trees.

    Args:
        x: Rank-1 element, word or bar monomial

    Returns:
        S(x); S(1) = 1
    """
    return _linear(x, lambda m: _reverse_product(m, _schroder_word))


@lru_cache(maxsize=None)
def _takeuchi_monomial(monomial: BarMonomial) -> TensorElement:
    if not monomial:
        return TensorElement.unit()
    total = TensorElement.zero()
    base = TensorElement.from_monomial(monomial)
    for k in range(1, sum(len(w) for w in monomial) + 1):
        total = total + multiply_slots(iterated_reduced_coproduct(base, k)) * (-1) ** k
    return total


def antipode_takeuchi(x) -> TensorElement:
    """S = sum_{k>=1} (-1)^k m^[k] o Delta-bar^[k] on the augmentation ideal."""
    return _linear(x, _takeuchi_monomial)


@lru_cache(maxsize=None)
def _bogoliubov_monomial(monomial: BarMonomial) -> TensorElement:
    if not monomial:
        return TensorElement.unit()
    result = -TensorElement.from_monomial(monomial)
    for (left, right), coeff in _reduced_monomial(monomial).items():
        term = bar_product(_bogoliubov_monomial(left), TensorElement.from_monomial(right))
        result = result - term * coeff
    return result


def antipode_bogoliubov(x) -> TensorElement:
    """Recursion 0 = S(w) + w + m o (S (x) id) o Delta-bar(w), by degree."""
    return _linear(x, _bogoliubov_monomial)


@lru_cache(maxsize=None)
def _projection_power(k: int, monomial: BarMonomial) -> TensorElement:
    """(id - eta eps)^{*k} applied to one bar monomial."""
    if k == 0:
        return TensorElement.unit() if not monomial else TensorElement.zero()
    if not monomial:
        return TensorElement.zero()
    total = TensorElement.zero()
    for (left, right), count in _monomial_terms(monomial, 'full'):
        if not right:
            continue
        head = _projection_power(k - 1, left)
        if head:
            total = total + bar_product(head, TensorElement.from_monomial(right)) * count
    return total


@lru_cache(maxsize=None)
def _convolution_monomial(monomial: BarMonomial) -> TensorElement:
    if not monomial:
        return TensorElement.unit()
    total = TensorElement.zero()
    for k in range(1, sum(len(w) for w in monomial) + 1):
        total = total + _projection_power(k, monomial) * (-1) ** k
    return total


def antipode_convolution(x) -> TensorElement:
    """S as the convolution inverse of the identity map."""
    return _linear(x, _convolution_monomial)


ANTIPODE_METHODS: Dict[str, Callable] = {
    'schroder': antipode_schroder,
    'takeuchi': antipode_takeuchi,
    'bogoliubov': antipode_bogoliubov,
    'convolution': antipode_convolution,
}


def antipode(x, method: str = 'schroder') -> TensorElement:
    try:
        fn = ANTIPODE_METHODS[method]
    except KeyError:
        raise UnknownMethodError('antipode', method, sorted(ANTIPODE_METHODS)) from None
    return fn(x)


def antipode_axiom_defect(x, method: str = 'schroder', side: str = 'left') -> TensorElement:
    """
    m o (S (x) id) o Delta(x) - eps(x) 1, or the right-handed version.

    Zero for every x when S is the antipode.
    """
    x = as_element(x)
    if side not in ('left', 'right'):
        raise DomainError(f"side must be 'left' or 'right', got {side!r}")
    total = TensorElement.zero()
    for (left, right), coeff in coproduct(x).items():
        if side == 'left':
            term = bar_product(antipode(left, method), TensorElement.from_monomial(right))
        else:
            term = bar_product(TensorElement.from_monomial(left), antipode(right, method))
        total = total + term * coeff
    return total - TensorElement.unit() * x.counit()


def cancellation_sum(t: SchroederTree, g: Linearization) -> int:
    """
    sum over k and over k-linearizations f with f-bar = g of (-1)^k.

    Equals (-1)^{i(t)} when g is ascent-free and 0 otherwise.
    """
    poset = skeleton(t)
    if sorted(g.levels) != list(range(1, poset.size + 1)):
        raise DomainError("g must be a bijective linearization")
    total = 0
    for k in range(1, poset.size + 1):
        for f in enumerate_k_linearizations(poset, k):
            if standardize_linearization(poset, f) == g:
                total += (-1) ** k
    return total


def bijective_linearizations(t: SchroederTree):
    """All i(t)-linearizations of the skeleton, with their ascent-free flag."""
    poset = skeleton(t)
    for g in enumerate_k_linearizations(poset, poset.size):
        yield g, is_ascent_free(poset, g)
