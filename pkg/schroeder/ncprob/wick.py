"""
Free Wick polynomials W = (id (x) Phi^{*-1}) o Delta, three ways.
"""

import logging
from collections import defaultdict
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Dict, List, Tuple

from ..combinatorics.partitions import block_of_root
from ..combinatorics.trees import enum_schroder, sector_blocks
from ..errors import DomainError, UnknownMethodError
from ..hopf.coproduct import _monomial_terms, connected_components, restrict
from ..hopf.tensor import UNIT, TensorElement, Word, make_word
from .cumulants import block_product, conv_inverse, cumulant_functional
from .functionals import Functional

logger = logging.getLogger(__name__)


def _element(terms: Dict[Word, Fraction]) -> TensorElement:
    return TensorElement(1, {((word,) if word else UNIT,): c for word, c in terms.items()})


def _wick_coproduct(w: Word, phi: Functional) -> TensorElement:
    inverse = conv_inverse(phi, 'antipode')
    acc: Dict[Word, Fraction] = defaultdict(Fraction)
    for (left, right), count in _monomial_terms((w,), 'full'):
        word = left[0] if left else ()
        acc[word] += count * inverse(right)
    return _element(acc)


def _interval_partitions_of(run: Tuple[int, ...]) -> List[Tuple[Tuple[int, ...], ...]]:
    """Interval partitions of a run of consecutive positions."""
    m = len(run)
    found = []
    for r in range(m):
        for cuts in combinations(range(1, m), r):
            bounds = (0,) + cuts + (m,)
            found.append(tuple(run[a:b] for a, b in zip(bounds, bounds[1:])))
    return found


def _wick_interval(w: Word, phi: Functional) -> TensorElement:
    kappa = cumulant_functional('free', phi, 'moebius')
    n = len(w)
    positions = range(1, n + 1)
    acc: Dict[Word, Fraction] = defaultdict(Fraction)
    for r in range(n + 1):
        for subset in combinations(positions, r):
            # Phi^{*-1} is multiplicative over the gaps left by the subset
            gaps = connected_components(subset, positions)
            for choice in product(*(_interval_partitions_of(gap) for gap in gaps)):
                blocks = tuple(block for part in choice for block in part)
                acc[restrict(w, subset)] += (-1) ** len(blocks) * block_product(kappa, w, blocks)
    return _element(acc)


def _wick_schroder(w: Word, phi: Functional) -> TensorElement:
    acc: Dict[Word, Fraction] = defaultdict(Fraction)
    for t in enum_schroder(len(w)):
        root = block_of_root(t)
        others = [b for b in sector_blocks(t) if b != root]
        weight = (-1) ** (t.internal_count - 1) * block_product(phi, w, others)
        if not weight:
            continue
        root_word = restrict(w, root)
        acc[root_word] += weight
        acc[()] -= weight * phi.on_word(root_word)
    return _element(acc)


WICK_METHODS: Dict[str, Callable[[Word, Functional], TensorElement]] = {
    'coproduct': _wick_coproduct,
    'interval': _wick_interval,
    'schroder': _wick_schroder,
}


def wick(w, phi: Functional, method: str = 'schroder') -> TensorElement:
    """
    Free Wick polynomial of a word.

    Args:
        w: Word (sequence of letter indices)
        phi: Character extending the moment functional
        method: 'coproduct' ((id (x) Phi o S) o Delta), 'interval'
            (signed free cumulants over interval partitions of the complement)
            or 'schroder' (sum over Sch(n) with the root block kept)

    Returns:
        Rank-1 element whose monomials are single words or the unit
    """
    if not phi.is_character:
        raise DomainError("wick needs a character")
    try:
        build = WICK_METHODS[method]
    except KeyError:
        raise UnknownMethodError('wick', method, list(WICK_METHODS)) from None
    w = tuple(w)
    if not w:
        return TensorElement.unit()
    w = make_word(w)
    phi._check_monomial((w,))
    result = build(w, phi)
    logger.debug(f"Wick polynomial of a length-{len(w)} word has {len(result)} terms")
    return result

