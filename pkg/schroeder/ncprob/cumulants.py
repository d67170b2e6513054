"""
Cumulant Transforms
===================

Moment-cumulant formulas for free, Boolean and monotone cumulants, each
computed several independent ways, and the convolution inverse of a
character by four methods.

Word-level formulas restrict by POSITION: k_pi(w) is the product of k over
the restrictions of w to the blocks of pi.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..combinatorics.partitions import (
    enum_interval,
    enum_nc,
    forest_factorial,
    hat_extension,
    moebius_nc,
    nesting_forest,
    one_partition,
)
from ..combinatorics.trees import (
    SchroederTree,
    enum_schroder,
    is_boolean,
    is_prime,
    murua_coefficient,
    sector_blocks,
)
from ..errors import DomainError, UnknownMethodError
from ..hopf.antipode import antipode_schroder
from ..hopf.coproduct import restrict, split
from ..hopf.tensor import Word
from .functionals import (
    Character,
    CumulantFunctional,
    Functional,
    InfinitesimalCharacter,
    MomentFunctional,
    conv_log,
    counit_like,
    geometric_inverse,
    half_shuffle_left,
    half_shuffle_right,
)

logger = logging.getLogger(__name__)

Blocks = Tuple[Tuple[int, ...], ...]
Weights = Tuple[Tuple[Blocks, Fraction], ...]

KINDS = ('free', 'boolean', 'monotone')

DEFAULT_METHODS = {
    'free': 'prime-trees',
    'boolean': 'boolean-trees',
    'monotone': 'omega-trees',
}


def block_product(f: Functional, w: Word, blocks: Sequence[Sequence[int]]) -> Fraction:
    """f_pi(w) = prod over blocks B of f(w_B)."""
    value = Fraction(1)
    for block in blocks:
        value *= f.on_word(restrict(w, block))
        if not value:
            break
    return value


def _weighted_sum(f: Functional, w: Word, weights: Weights) -> Fraction:
    return sum((weight * block_product(f, w, blocks) for blocks, weight in weights), Fraction(0))


def _collect(pairs) -> Weights:
    merged: Dict[Blocks, Fraction] = {}
    for blocks, weight in pairs:
        key = tuple(sorted(blocks))
        merged[key] = merged.get(key, Fraction(0)) + weight
    return tuple((b, w) for b, w in sorted(merged.items()) if w)


# ---------------------------------------------------------------------------
# Partition and tree weights, per length
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _moment_weights(kind: str, n: int) -> Weights:
    if kind == 'free':
        return _collect((p.blocks, Fraction(1)) for p in enum_nc(n))
    if kind == 'boolean':
        return _collect((p.blocks, Fraction(1)) for p in enum_interval(n))
    return _collect(
        (p.blocks, Fraction(1, forest_factorial(nesting_forest(p)))) for p in enum_nc(n)
    )


@lru_cache(maxsize=None)
def _moebius_weights(n: int) -> Weights:
    top = one_partition(n)
    return _collect((p.blocks, Fraction(moebius_nc(p, top))) for p in enum_nc(n))


@lru_cache(maxsize=None)
def _interval_weights(n: int, sign_offset: int) -> Weights:
    return _collect(
        (p.blocks, Fraction((-1) ** (len(p) + sign_offset))) for p in enum_interval(n)
    )


@lru_cache(maxsize=None)
def _tree_weights(n: int, family: str) -> Weights:
    pairs = []
    for t in enum_schroder(n):
        if family == 'prime' and not is_prime(t):
            continue
        if family == 'boolean' and not is_boolean(t):
            continue
        if family == 'omega':
            weight = murua_coefficient(t)
        else:
            weight = Fraction((-1) ** (t.internal_count - 1))
        pairs.append((sector_blocks(t), weight))
    logger.debug(f"Tree weights for {family} cumulants of length {n}: {len(pairs)} trees")
    return _collect(pairs)


@lru_cache(maxsize=None)
def _inverse_weights(n: int) -> Weights:
    top = one_partition(n + 1)
    return _collect(
        (p.blocks, Fraction(moebius_nc(hat_extension(p), top))) for p in enum_nc(n)
    )


def murua_table(n: int) -> Dict[SchroederTree, Fraction]:
    """omega(sk(t)) for every t in Sch(n)."""
    return {t: murua_coefficient(t) for t in enum_schroder(n)}


# ---------------------------------------------------------------------------
# Convolution inverse
# ---------------------------------------------------------------------------

def _inverse_antipode(phi: Functional) -> Functional:
    return Character(lambda w: phi.evaluate(antipode_schroder(w)), phi.max_degree, phi.alphabet)


def _inverse_noncrossing(phi: Functional) -> Functional:
    return Character(
        lambda w: _weighted_sum(phi, w, _inverse_weights(len(w))),
        phi.max_degree,
        phi.alphabet
    )


def _inverse_interval(phi: Functional) -> Functional:
    kappa = _free_moebius(phi)
    return Character(
        lambda w: _weighted_sum(kappa, w, _interval_weights(len(w), 0)),
        phi.max_degree,
        phi.alphabet
    )


INVERSE_METHODS: Dict[str, Callable[[Functional], Functional]] = {
    'antipode': _inverse_antipode,
    'geometric': geometric_inverse,
    'noncrossing': _inverse_noncrossing,
    'interval': _inverse_interval,
}


def conv_inverse(phi: Functional, method: str = 'antipode') -> Functional:
    """
    Phi^{*-1} for a character Phi.

    Args:
        phi: Character (e.g. a MomentFunctional)
        method: 'antipode' (Phi o S), 'geometric' (sum (-1)^k (Phi - eps)^{*k}),
            'noncrossing' (sum over NC(n) of Moeb(pi-hat, 1) phi_pi) or
            'interval' (sum over NCInt(n) of (-1)^{|pi|} k_pi)

    Returns:
        Character Phi^{*-1}
    """
    if not phi.is_character:
        raise DomainError("conv_inverse needs a character")
    try:
        build = INVERSE_METHODS[method]
    except KeyError:
        raise UnknownMethodError('inverse', method, list(INVERSE_METHODS)) from None
    return build(phi)


# ---------------------------------------------------------------------------
# Cumulants from moments
# ---------------------------------------------------------------------------

def _infinitesimal(phi: Functional, value: Callable[[Word], Fraction]) -> Functional:
    return InfinitesimalCharacter(value, phi.max_degree, phi.alphabet)


def _free_moebius(phi: Functional) -> Functional:
    return _infinitesimal(phi, lambda w: _weighted_sum(phi, w, _moebius_weights(len(w))))


def _free_prime_trees(phi: Functional) -> Functional:
    return _infinitesimal(phi, lambda w: _weighted_sum(phi, w, _tree_weights(len(w), 'prime')))


def _free_shuffle(phi: Functional) -> Functional:
    return half_shuffle_left(phi - counit_like(phi), conv_inverse(phi, 'antipode'))


def _boolean_intervals(phi: Functional) -> Functional:
    return _infinitesimal(phi, lambda w: _weighted_sum(phi, w, _interval_weights(len(w), 1)))


def _boolean_trees(phi: Functional) -> Functional:
    return _infinitesimal(phi, lambda w: _weighted_sum(phi, w, _tree_weights(len(w), 'boolean')))


def _boolean_shuffle(phi: Functional) -> Functional:
    return half_shuffle_right(conv_inverse(phi, 'antipode'), phi - counit_like(phi))


def _monotone_omega(phi: Functional) -> Functional:
    return _infinitesimal(phi, lambda w: _weighted_sum(phi, w, _tree_weights(len(w), 'omega')))


def solve_left_fixed_point(phi: Functional) -> Functional:
    """
    The infinitesimal character kappa with Phi = eps + kappa < Phi.

    Solved word by word: kappa(w) = Phi(w) - sum over proper A containing 1
    of kappa(w_A) Phi(w^(A)).
    """
    if not phi.is_character:
        raise DomainError("solve_left_fixed_point needs a character")
    kappa: Optional[Functional] = None

    def value(w: Word) -> Fraction:
        n = len(w)
        total = phi.on_word(w)
        for r in range(n - 1):
            for rest in combinations(range(2, n + 1), r):
                subset = (1,) + rest
                total -= kappa.on_word(restrict(w, subset)) * phi(split(w, subset))
        return total

    kappa = _infinitesimal(phi, value)
    return kappa


def solve_right_fixed_point(phi: Functional) -> Functional:
    """
    The infinitesimal character beta with Phi = eps + Phi > beta.

    beta(w) = Phi(w) - sum over nonempty A avoiding 1 of Phi(w_A) beta(w^(A)),
    where beta vanishes unless w^(A) is a single word.
    """
    if not phi.is_character:
        raise DomainError("solve_right_fixed_point needs a character")
    beta: Optional[Functional] = None

    def value(w: Word) -> Fraction:
        n = len(w)
        total = phi.on_word(w)
        for r in range(1, n):
            for subset in combinations(range(2, n + 1), r):
                rest = split(w, subset)
                if len(rest) != 1:
                    continue
                total -= phi.on_word(restrict(w, subset)) * beta(rest)
        return total

    beta = _infinitesimal(phi, value)
    return beta


CUMULANT_METHODS: Dict[str, Dict[str, Callable[[Functional], Functional]]] = {
    'free': {
        'moebius': _free_moebius,
        'prime-trees': _free_prime_trees,
        'shuffle': _free_shuffle,
        'fixed-point': solve_left_fixed_point,
    },
    'boolean': {
        'intervals': _boolean_intervals,
        'boolean-trees': _boolean_trees,
        'shuffle': _boolean_shuffle,
        'fixed-point': solve_right_fixed_point,
    },
    'monotone': {
        'omega-trees': _monotone_omega,
        'log': conv_log,
    },
}


def _check_kind(kind: str):
    if kind not in KINDS:
        raise DomainError(f"kind must be one of {', '.join(KINDS)}, got {kind!r}")


def cumulant_functional(kind: str, phi: Functional, method: Optional[str] = None) -> Functional:
    """The cumulants of ``phi`` as a lazily evaluated infinitesimal character."""
    _check_kind(kind)
    method = method or DEFAULT_METHODS[kind]
    try:
        build = CUMULANT_METHODS[kind][method]
    except KeyError:
        raise UnknownMethodError(f"{kind} cumulants", method, list(CUMULANT_METHODS[kind])) from None
    return build(phi)


def cumulants_from_moments(
    kind: str,
    phi: MomentFunctional,
    method: Optional[str] = None,
    words: Optional[Sequence[Word]] = None
) -> CumulantFunctional:
    """
    Tabulate free, Boolean or monotone cumulants of a moment functional.

    Args:
        kind: 'free', 'boolean' or 'monotone'
        phi: Moment functional
        method: Formula to use (default per kind: prime-trees, boolean-trees, omega-trees)
        words: Words to tabulate (default: every word in the moment table)

    Returns:
        CumulantFunctional with the same cap and alphabet
    """
    cumulants = cumulant_functional(kind, phi, method)
    targets = list(words) if words is not None else phi.words()
    table = {w: cumulants.on_word(w) for w in targets}
    logger.debug(f"Computed {len(table)} {kind} cumulants with method {method or DEFAULT_METHODS[kind]}")
    return CumulantFunctional(kind, table, phi.max_degree, phi.alphabet)


def moments_from_cumulants(
    kind: str,
    cumulants: CumulantFunctional,
    words: Optional[Sequence[Word]] = None
) -> MomentFunctional:
    """
    Moments as partition sums of cumulants: over NC(n) (free), NCInt(n)
    (Boolean) or NC(n) weighted by 1/f_pi! (monotone).
    """
    _check_kind(kind)
    targets = list(words) if words is not None else cumulants.words()
    table = {w: _weighted_sum(cumulants, w, _moment_weights(kind, len(w))) for w in targets}
    return MomentFunctional(table, cumulants.max_degree, cumulants.alphabet)


def available_methods(kind: str) -> List[str]:
    _check_kind(kind)
    return list(CUMULANT_METHODS[kind])
