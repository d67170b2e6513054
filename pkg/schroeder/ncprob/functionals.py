"""
Functionals
===========

Linear functionals on the double tensor Hopf algebra H, evaluated lazily on
bar monomials and memoized. Characters are multiplicative over bars and send
the unit to 1; infinitesimal characters vanish on the unit and on every
product of two or more words.

Every functional carries a degree cap and an alphabet; combining functionals
with different caps or alphabets is refused. Evaluation above the cap raises
DegreeOverflowError.
"""

import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from math import factorial
from threading import Lock
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..errors import DegreeOverflowError, DomainError, MissingMomentError
from ..hopf.coproduct import FULL, LEFT, RIGHT, _monomial_terms
from ..hopf.tensor import BarMonomial, Word, as_element, degree_of

logger = logging.getLogger(__name__)

Alphabet = Tuple[str, ...]


def default_alphabet(size: int) -> Alphabet:
    return tuple(f"a{i}" for i in range(1, size + 1))


class Functional(ABC):
    """Linear functional on H, defined on bar monomials up to ``max_degree``."""

    is_character = False
    is_infinitesimal = False

    def __init__(self, max_degree: int, alphabet: Sequence[str]):
        if max_degree < 0:
            raise DomainError(f"max_degree must be non-negative, got {max_degree}")
        self.max_degree = max_degree
        self.alphabet: Alphabet = tuple(alphabet)
        self._cache: Dict[BarMonomial, Fraction] = {}
        self._lock = Lock()

    def _check_monomial(self, monomial: BarMonomial):
        degree = degree_of(monomial)
        if degree > self.max_degree:
            raise DegreeOverflowError(
                f"degree {degree} exceeds the cap {self.max_degree} of this functional"
            )
        for word in monomial:
            for letter in word:
                if letter > len(self.alphabet):
                    raise DomainError(
                        f"letter {letter} is outside the alphabet of size {len(self.alphabet)}"
                    )

    def __call__(self, monomial: BarMonomial) -> Fraction:
        monomial = tuple(tuple(w) for w in monomial)
        cached = self._cache.get(monomial)
        if cached is not None:
            return cached
        self._check_monomial(monomial)
        value = Fraction(self._evaluate(monomial))
        with self._lock:
            self._cache.setdefault(monomial, value)
        return value

    @abstractmethod
    def _evaluate(self, monomial: BarMonomial) -> Fraction:
        """Value on one bar monomial (degree and letters already checked)."""

    def on_word(self, word: Sequence[int]) -> Fraction:
        return self((tuple(word),))

    def evaluate(self, x) -> Fraction:
        """Value on a rank-1 element, extended linearly."""
        x = as_element(x)
        total = Fraction(0)
        for monomial, coeff in x.monomials():
            total += coeff * self(monomial)
        return total

    def tabulate(self, words: Iterable[Word]) -> Dict[Word, Fraction]:
        return {tuple(w): self.on_word(w) for w in words}

    # linear structure

    def __add__(self, other: 'Functional') -> 'Functional':
        return LinearCombination([(Fraction(1), self), (Fraction(1), other)])

    def __sub__(self, other: 'Functional') -> 'Functional':
        return LinearCombination([(Fraction(1), self), (Fraction(-1), other)])

    def __neg__(self) -> 'Functional':
        return LinearCombination([(Fraction(-1), self)])

    def __rmul__(self, scalar) -> 'Functional':
        return LinearCombination([(Fraction(scalar), self)])


def check_compatible(*functionals: Functional):
    caps = {f.max_degree for f in functionals}
    if len(caps) > 1:
        raise DegreeOverflowError(f"degree caps differ: {sorted(caps)}")
    alphabets = {f.alphabet for f in functionals}
    if len(alphabets) > 1:
        raise DomainError("functionals are defined over different alphabets")


class LinearCombination(Functional):
    """sum_i c_i f_i"""

    def __init__(self, terms: List[Tuple[Fraction, Functional]]):
        check_compatible(*(f for _, f in terms))
        first = terms[0][1]
        super().__init__(first.max_degree, first.alphabet)
        self.terms = terms
        self.is_infinitesimal = all(f.is_infinitesimal for _, f in terms)

    def _evaluate(self, monomial: BarMonomial) -> Fraction:
        return sum((c * f(monomial) for c, f in self.terms), Fraction(0))


class Character(Functional):
    """
    Multiplicative functional given by its values on words.

    Args:
        word_value: Value on a single word
        max_degree: Degree cap
        alphabet: Letter names
    """

    is_character = True

    def __init__(self, word_value: Callable[[Word], Fraction], max_degree: int, alphabet: Sequence[str]):
        super().__init__(max_degree, alphabet)
        self._word_value = word_value

    def _evaluate(self, monomial: BarMonomial) -> Fraction:
        if len(monomial) == 1:
            return Fraction(self._word_value(monomial[0]))
        value = Fraction(1)
        for word in monomial:
            value *= self((word,))
            if not value:
                break
        return value


class InfinitesimalCharacter(Functional):
    """Functional supported on single words."""

    is_infinitesimal = True

    def __init__(self, word_value: Callable[[Word], Fraction], max_degree: int, alphabet: Sequence[str]):
        super().__init__(max_degree, alphabet)
        self._word_value = word_value

    def _evaluate(self, monomial: BarMonomial) -> Fraction:
        if len(monomial) != 1:
            return Fraction(0)
        return Fraction(self._word_value(monomial[0]))


class _WordTable:
    """Lookup shared by moment and cumulant tables."""

    def __init__(self, table: Mapping[Sequence[int], Fraction]):
        self.table: Dict[Word, Fraction] = {tuple(w): Fraction(v) for w, v in table.items()}

    def lookup(self, word: Word) -> Fraction:
        try:
            return self.table[word]
        except KeyError:
            raise MissingMomentError(word) from None

    def words(self) -> List[Word]:
        return sorted(self.table, key=lambda w: (len(w), w))


class MomentFunctional(Character):
    """Moments phi_n(a_{i_1}, ..., a_{i_n}) given as a table, extended to a character."""

    def __init__(
        self,
        table: Mapping[Sequence[int], Fraction],
        max_degree: int,
        alphabet: Optional[Sequence[str]] = None
    ):
        store = _WordTable(table)
        if alphabet is None:
            alphabet = default_alphabet(max((max(w) for w in store.table if w), default=0))
        super().__init__(store.lookup, max_degree, alphabet)
        self._store = store
        for word in store.table:
            if not word:
                raise DomainError("moment tables hold nonempty words only; phi(1) = 1 is implicit")
            self._check_monomial((word,))

    @property
    def table(self) -> Dict[Word, Fraction]:
        return self._store.table

    def words(self) -> List[Word]:
        return self._store.words()

    def __repr__(self) -> str:
        return f"MomentFunctional(max_degree={self.max_degree}, entries={len(self.table)})"


class CumulantFunctional(InfinitesimalCharacter):
    """Free, Boolean or monotone cumulants as an infinitesimal character."""

    KINDS = ('free', 'boolean', 'monotone')

    def __init__(
        self,
        kind: str,
        table: Mapping[Sequence[int], Fraction],
        max_degree: int,
        alphabet: Optional[Sequence[str]] = None
    ):
        if kind not in self.KINDS:
            raise DomainError(f"kind must be one of {', '.join(self.KINDS)}, got {kind!r}")
        store = _WordTable(table)
        if alphabet is None:
            alphabet = default_alphabet(max((max(w) for w in store.table if w), default=0))
        super().__init__(store.lookup, max_degree, alphabet)
        self.kind = kind
        self._store = store
        for word in store.table:
            if not word:
                raise DomainError("cumulant tables hold nonempty words only")
            self._check_monomial((word,))

    @property
    def table(self) -> Dict[Word, Fraction]:
        return self._store.table

    def words(self) -> List[Word]:
        return self._store.words()

    def __repr__(self) -> str:
        return f"CumulantFunctional(kind={self.kind!r}, max_degree={self.max_degree}, entries={len(self.table)})"


class Counit(Character):
    """epsilon: 1 on the unit, 0 on every nonempty bar monomial."""

    def __init__(self, max_degree: int, alphabet: Sequence[str]):
        super().__init__(lambda word: Fraction(0), max_degree, alphabet)


def counit_like(f: Functional) -> Counit:
    return Counit(f.max_degree, f.alphabet)


def character_eval(phi: Functional, x) -> Fraction:
    """Phi(x) for a character Phi and a rank-1 element x."""
    if not phi.is_character:
        raise DomainError("character_eval needs a character")
    return phi.evaluate(x)


class ProductFunctional(Functional):
    """f * g, f < g or f > g: (f (x) g) composed with Delta, Delta_< or Delta_>."""

    def __init__(self, f: Functional, g: Functional, side: str = FULL):
        check_compatible(f, g)
        super().__init__(f.max_degree, f.alphabet)
        self.f, self.g, self.side = f, g, side
        self.is_character = side == FULL and f.is_character and g.is_character

    def _evaluate(self, monomial: BarMonomial) -> Fraction:
        if not monomial:
            # half-shuffles vanish on the unit
            return self.f(()) * self.g(()) if self.side == FULL else Fraction(0)
        total = Fraction(0)
        for (left, right), count in _monomial_terms(monomial, self.side):
            a = self.f(left)
            if a:
                total += count * a * self.g(right)
        return total


def convolve(f: Functional, g: Functional) -> Functional:
    return ProductFunctional(f, g, FULL)


def half_shuffle_left(f: Functional, g: Functional) -> Functional:
    """f < g, dual to Delta_<."""
    return ProductFunctional(f, g, LEFT)


def half_shuffle_right(f: Functional, g: Functional) -> Functional:
    """f > g, dual to Delta_>."""
    return ProductFunctional(f, g, RIGHT)


class SeriesFunctional(Functional):
    """
    sum_k c_k a^k for a functional a vanishing on the unit.

    Powers are built with ``step`` (a^0 = epsilon); on a bar monomial of
    degree d only powers k <= d contribute, so every value is a finite sum.
    """

    def __init__(
        self,
        base: Functional,
        coefficient: Callable[[int], Fraction],
        step: Callable[[Functional, Functional], Functional],
        is_character: bool = False,
        is_infinitesimal: bool = False
    ):
        super().__init__(base.max_degree, base.alphabet)
        self.base = base
        self.coefficient = coefficient
        self.step = step
        self.is_character = is_character
        self.is_infinitesimal = is_infinitesimal
        self._powers: List[Functional] = [counit_like(base)]
        self._powers_lock = Lock()

    def power(self, k: int) -> Functional:
        with self._powers_lock:
            while len(self._powers) <= k:
                self._powers.append(self.step(self._powers[-1], self.base))
            return self._powers[k]

    def _evaluate(self, monomial: BarMonomial) -> Fraction:
        total = Fraction(0)
        for k in range(degree_of(monomial) + 1):
            c = self.coefficient(k)
            if c:
                total += c * self.power(k)(monomial)
        return total


def _require_infinitesimal(alpha: Functional, what: str):
    if not alpha.is_infinitesimal:
        raise DomainError(f"{what} needs an infinitesimal character")


def conv_exp(alpha: Functional) -> Functional:
    """exp*(alpha) = sum alpha^{*n} / n!"""
    _require_infinitesimal(alpha, "conv_exp")
    return SeriesFunctional(
        alpha,
        lambda k: Fraction(1, factorial(k)),
        lambda previous, a: convolve(previous, a),
        is_character=True
    )


def conv_log(phi: Functional) -> Functional:
    """log*(Phi) = sum_{k>=1} (-1)^(k-1)/k (Phi - eps)^{*k}"""
    if not phi.is_character:
        raise DomainError("conv_log needs a character")
    return SeriesFunctional(
        phi - counit_like(phi),
        lambda k: Fraction((-1) ** (k - 1), k) if k else Fraction(0),
        lambda previous, a: convolve(previous, a),
        is_infinitesimal=True
    )


def exp_left(alpha: Functional) -> Functional:
    """E_<(alpha) = sum alpha^{<n}, alpha^{<(n+1)} = alpha < alpha^{<n}."""
    _require_infinitesimal(alpha, "exp_left")
    return SeriesFunctional(
        alpha,
        lambda k: Fraction(1),
        lambda previous, a: half_shuffle_left(a, previous),
        is_character=True
    )


def exp_right(alpha: Functional) -> Functional:
    """E_>(alpha) = sum alpha^{>n}, alpha^{>(n+1)} = alpha^{>n} > alpha."""
    _require_infinitesimal(alpha, "exp_right")
    return SeriesFunctional(
        alpha,
        lambda k: Fraction(1),
        lambda previous, a: half_shuffle_right(previous, a),
        is_character=True
    )


def geometric_inverse(phi: Functional) -> Functional:
    """sum_k (-1)^k (Phi - eps)^{*k}"""
    if not phi.is_character:
        raise DomainError("inverse needs a character")
    return SeriesFunctional(
        phi - counit_like(phi),
        lambda k: Fraction((-1) ** k),
        lambda previous, a: convolve(previous, a),
        is_character=True
    )


def functional_from_words(
    word_value: Callable[[Word], Fraction],
    like: Functional,
    character: bool
) -> Functional:
    """Character or infinitesimal character sharing the cap and alphabet of ``like``."""
    cls = Character if character else InfinitesimalCharacter
    return cls(word_value, like.max_degree, like.alphabet)


def all_words(alphabet_size: int, max_degree: int, min_degree: int = 1) -> List[Word]:
    """Every word over [alphabet_size] with min_degree <= length <= max_degree."""
    words: List[Word] = []
    layer: List[Word] = [()]
    for length in range(1, max_degree + 1):
        layer = [w + (letter,) for w in layer for letter in range(1, alphabet_size + 1)]
        if length >= min_degree:
            words.extend(layer)
    return words