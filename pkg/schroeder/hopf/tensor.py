"""
Tensor Elements
===============

Words, bar monomials and exact-rational linear combinations of r-tuples of
bar monomials (elements of H^{(x)r} for H the double tensor algebra).

A word is a tuple of positive letter ids, a bar monomial a tuple of words
(the empty tuple is the unit), and a key of a rank-r element is a tuple of
r bar monomials. In a commutative element every bar monomial is kept sorted,
so it stands for a monomial of the symmetric algebra.
"""

import logging
from collections import defaultdict
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

from ..errors import DomainError, RankMismatchError, WordParseError
from ..utils.rationals import format_coefficient

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
BarMonomial = Tuple[Word, ...]
Key = Tuple[BarMonomial, ...]
Scalar = Union[int, Fraction]

UNIT: BarMonomial = ()


def make_word(letters: Iterable[int]) -> Word:
    """Validate a letter sequence."""
    word = tuple(letters)
    if not word:
        raise DomainError("a word needs at least one letter")
    for letter in word:
        if isinstance(letter, bool) or not isinstance(letter, int) or letter < 1:
            raise DomainError(f"letters are positive integers, got {letter!r}")
    return word


def parse_word(text: str) -> Word:
    """
    Read a word written as space-separated letter ids, e.g. ``"1 2 1"``.

    Raises:
        WordParseError: on an empty word or a token that is not a positive integer
    """
    letters = []
    position = 0
    for token in text.split():
        position = text.index(token, position)
        if not (token.isascii() and token.isdigit()) or int(token) < 1:
            raise WordParseError(f"bad letter {token!r}", text, position)
        letters.append(int(token))
        position += len(token)
    if not letters:
        raise WordParseError("empty word", text)
    return tuple(letters)


def word_text(word: Word) -> str:
    """Inverse of ``parse_word``; also the moment-file key format."""
    return ' '.join(str(letter) for letter in word)


def degree_of(monomial: BarMonomial) -> int:
    return sum(len(w) for w in monomial)


def _canonical_key(key: Sequence[Sequence[Sequence[int]]], commutative: bool) -> Key:
    slots = []
    for monomial in key:
        words = tuple(tuple(w) for w in monomial)
        if any(not w for w in words):
            raise DomainError("empty word inside a bar monomial")
        slots.append(tuple(sorted(words)) if commutative else words)
    return tuple(slots)


class TensorElement:
    """
    Finite linear combination of rank-r keys with Fraction coefficients.

    Zero coefficients are never stored; iteration is in sorted key order.
    """

    def __init__(
        self,
        rank: int = 1,
        terms: Mapping[Key, Scalar] = None,
        commutative: bool = False
    ):
        if rank < 1:
            raise DomainError(f"rank must be >= 1, got {rank}")
        self.rank = rank
        self.commutative = commutative
        self._terms: Dict[Key, Fraction] = {}
        for key, coeff in (terms or {}).items():
            if len(key) != rank:
                raise RankMismatchError(f"key {key!r} has {len(key)} slots, element has rank {rank}")
            canonical = _canonical_key(key, commutative)
            value = self._terms.get(canonical, Fraction(0)) + Fraction(coeff)
            if value:
                self._terms[canonical] = value
            else:
                self._terms.pop(canonical, None)

    # construction helpers

    @classmethod
    def zero(cls, rank: int = 1, commutative: bool = False) -> 'TensorElement':
        return cls(rank, {}, commutative)

    @classmethod
    def unit(cls, rank: int = 1, commutative: bool = False) -> 'TensorElement':
        return cls(rank, {(UNIT,) * rank: 1}, commutative)

    @classmethod
    def from_monomial(cls, monomial: BarMonomial, coeff: Scalar = 1, commutative: bool = False) -> 'TensorElement':
        return cls(1, {(tuple(monomial),): coeff}, commutative)

    @classmethod
    def from_word(cls, word: Iterable[int], coeff: Scalar = 1) -> 'TensorElement':
        return cls(1, {((make_word(word),),): coeff})

    # mapping protocol

    def items(self) -> List[Tuple[Key, Fraction]]:
        return sorted(self._terms.items())

    def keys(self) -> List[Key]:
        return sorted(self._terms)

    def __iter__(self) -> Iterator[Tuple[Key, Fraction]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, key: Key) -> Fraction:
        return self._terms.get(_canonical_key(key, self.commutative), Fraction(0))

    def __getitem__(self, key: Key) -> Fraction:
        return self.coefficient(key)

    # vector space structure

    def _check(self, other: 'TensorElement'):
        if not isinstance(other, TensorElement):
            raise TypeError(f"cannot combine TensorElement with {type(other).__name__}")
        if other.rank != self.rank:
            raise RankMismatchError(f"rank {self.rank} vs rank {other.rank}")
        if other.commutative != self.commutative:
            raise DomainError("cannot mix commutative and non-commutative elements")

    def __add__(self, other: 'TensorElement') -> 'TensorElement':
        self._check(other)
        merged: Dict[Key, Fraction] = dict(self._terms)
        for key, coeff in other._terms.items():
            merged[key] = merged.get(key, Fraction(0)) + coeff
        return TensorElement(self.rank, merged, self.commutative)

    def __neg__(self) -> 'TensorElement':
        return TensorElement(self.rank, {k: -c for k, c in self._terms.items()}, self.commutative)

    def __sub__(self, other: 'TensorElement') -> 'TensorElement':
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> 'TensorElement':
        if isinstance(scalar, TensorElement):
            return bar_product(self, scalar)
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return TensorElement(self.rank, {k: c * scalar for k, c in self._terms.items()}, self.commutative)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.commutative == other.commutative
            and self._terms == other._terms
        )

    __hash__ = None

    # structure

    def counit(self) -> Fraction:
        """epsilon: the coefficient of the unit."""
        return self._terms.get((UNIT,) * self.rank, Fraction(0))

    def without_unit(self) -> 'TensorElement':
        unit_key = (UNIT,) * self.rank
        return TensorElement(
            self.rank,
            {k: c for k, c in self._terms.items() if k != unit_key},
            self.commutative
        )

    def gradings(self) -> List[Tuple[int, ...]]:
        """Per-term letter count of every slot."""
        return [tuple(degree_of(m) for m in key) for key in self.keys()]

    def total_degrees(self) -> List[int]:
        return sorted({sum(g) for g in self.gradings()})

    def monomials(self) -> Iterator[Tuple[BarMonomial, Fraction]]:
        """Rank-1 view: (bar monomial, coefficient) pairs."""
        if self.rank != 1:
            raise RankMismatchError(f"monomials() needs rank 1, element has rank {self.rank}")
        for key, coeff in self.items():
            yield key[0], coeff

    def __repr__(self) -> str:
        return f"TensorElement(rank={self.rank}, {pretty(self)})"

    def __str__(self) -> str:
        return pretty(self)


def as_element(x: Union[TensorElement, Sequence]) -> TensorElement:
    """Accept a TensorElement, a word (tuple of ints) or a bar monomial (tuple of words)."""
    if isinstance(x, TensorElement):
        return x
    items = tuple(x)
    if not items:
        return TensorElement.unit()
    if all(isinstance(a, int) for a in items):
        return TensorElement.from_word(items)
    return TensorElement.from_monomial(tuple(make_word(w) for w in items))


def bar_product(x: TensorElement, y: TensorElement) -> TensorElement:
    """Slotwise concatenation, extended bilinearly; the unit is neutral."""
    if not isinstance(x, TensorElement) or not isinstance(y, TensorElement):
        raise TypeError("bar_product takes two TensorElements")
    if x.rank != y.rank:
        raise RankMismatchError(f"rank {x.rank} vs rank {y.rank}")
    commutative = x.commutative or y.commutative
    acc: Dict[Key, Fraction] = defaultdict(Fraction)
    for kx, cx in x._terms.items():
        for ky, cy in y._terms.items():
            acc[tuple(a + b for a, b in zip(kx, ky))] += cx * cy
    return TensorElement(x.rank, acc, commutative)


def multiply_slots(x: TensorElement) -> TensorElement:
    """m^[k]: concatenate all slots of every key into one bar monomial."""
    acc: Dict[Key, Fraction] = defaultdict(Fraction)
    for key, coeff in x._terms.items():
        acc[(tuple(w for monomial in key for w in monomial),)] += coeff
    return TensorElement(1, acc, x.commutative)


def apply_to_slot(
    x: TensorElement,
    slot: int,
    fn: Callable[[BarMonomial], TensorElement],
    image_rank: int
) -> TensorElement:
    """
    Apply a linear map H -> H^{(x)s} to one slot.

    Args:
        x: Element of rank r
        slot: Index (0-based) of the slot to transform
        fn: Image of a single bar monomial
        image_rank: Rank s of every image of fn

    Returns:
        Element of rank r - 1 + s
    """
    if not 0 <= slot < x.rank:
        raise DomainError(f"slot {slot} out of range for rank {x.rank}")
    acc: Dict[Key, Fraction] = defaultdict(Fraction)
    commutative = x.commutative
    for key, coeff in x._terms.items():
        image = fn(key[slot])
        if image.rank != image_rank:
            raise RankMismatchError(f"slot map returned rank {image.rank}, expected {image_rank}")
        commutative = commutative or image.commutative
        for sub, c in image._terms.items():
            acc[key[:slot] + sub + key[slot + 1:]] += coeff * c
    return TensorElement(x.rank - 1 + image_rank, acc, commutative)


def _word_pretty(word: Word) -> str:
    return ''.join(f"a{letter}" for letter in word)


def monomial_pretty(monomial: BarMonomial, commutative: bool = False) -> str:
    if not monomial:
        return '1'
    return ('·' if commutative else '|').join(_word_pretty(w) for w in monomial)


def pretty(x: TensorElement) -> str:
    """Human-readable form, e.g. ``-a1a2 + a1|a2 + a2|a1``; ``0`` for zero."""
    if not x:
        return '0'
    parts = []
    for key, coeff in x.items():
        body = ' ⊗ '.join(monomial_pretty(m, x.commutative) for m in key)
        magnitude = abs(coeff)
        sign = '-' if coeff < 0 else '+'
        if x.rank == 1 and not key[0]:
            # scalar multiple of the unit
            parts.append((sign, format_coefficient(magnitude)))
            continue
        prefix = '' if magnitude == 1 else format_coefficient(magnitude) + ' '
        parts.append((sign, prefix + body))
    first_sign, first_body = parts[0]
    text = ('-' if first_sign == '-' else '') + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text
