"""
Table Generators
================

Univariate fixtures (semicircle, constant) and seeded random rational tables
for property checks.
"""

import logging
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..config import config
from ..hopf.tensor import Word
from ..ncprob.functionals import (
    CumulantFunctional,
    Functional,
    InfinitesimalCharacter,
    MomentFunctional,
    all_words,
    default_alphabet,
)

logger = logging.getLogger(__name__)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def moments_from_sequence(seq: Sequence) -> MomentFunctional:
    """Univariate moments: phi(a1^n) = seq[n - 1]."""
    table = {(1,) * n: Fraction(value) for n, value in enumerate(seq, start=1)}
    return MomentFunctional(table, len(seq), default_alphabet(1))


def semicircle_moments(max_degree: int) -> MomentFunctional:
    """Standard semicircle: odd moments 0, m_{2k} = Cat_k."""
    return moments_from_sequence(
        [catalan(n // 2) if n % 2 == 0 else 0 for n in range(1, max_degree + 1)]
    )


def constant_moments(max_degree: int, value=1) -> MomentFunctional:
    return moments_from_sequence([value] * max_degree)


class RandomTableGenerator:
    """
    Seeded source of small random rationals.

    Numerators are drawn from [-numerator_bound, numerator_bound] and
    denominators from [1, denominator_bound]; the same seed always gives the
    same tables.
    """

    def __init__(
        self,
        seed: int = 0,
        numerator_bound: Optional[int] = None,
        denominator_bound: Optional[int] = None
    ):
        self.seed = seed
        self.numerator_bound = numerator_bound or config.get('verification.numerator_bound', 5)
        self.denominator_bound = denominator_bound or config.get('verification.denominator_bound', 3)
        self.rng = np.random.default_rng(seed)

    def rational(self) -> Fraction:
        numerator = int(self.rng.integers(-self.numerator_bound, self.numerator_bound + 1))
        denominator = int(self.rng.integers(1, self.denominator_bound + 1))
        return Fraction(numerator, denominator)

    def _table(self, words: List[Word]) -> Dict[Word, Fraction]:
        return {w: self.rational() for w in words}

    def moment_table(self, alphabet_size: int, max_degree: int) -> MomentFunctional:
        """Every word over [alphabet_size] up to max_degree gets a random moment."""
        table = self._table(all_words(alphabet_size, max_degree))
        return MomentFunctional(table, max_degree, default_alphabet(alphabet_size))

    def cumulant_table(self, kind: str, alphabet_size: int, max_degree: int) -> CumulantFunctional:
        table = self._table(all_words(alphabet_size, max_degree))
        return CumulantFunctional(kind, table, max_degree, default_alphabet(alphabet_size))

    def infinitesimal_table(self, alphabet_size: int, max_degree: int) -> Functional:
        table = self._table(all_words(alphabet_size, max_degree))
        return InfinitesimalCharacter(table.__getitem__, max_degree, default_alphabet(alphabet_size))

    def repeated_letter_words(self, count: int, max_length: int, alphabet_size: int = 2) -> List[Word]:
        """Distinct words that repeat at least one letter, in draw order."""
        found: List[Word] = []
        attempts = 0
        while len(found) < count and attempts < 100 * count:
            attempts += 1
            length = int(self.rng.integers(2, max_length + 1))
            word = tuple(int(x) for x in self.rng.integers(1, alphabet_size + 1, size=length))
            if len(set(word)) < len(word) and word not in found:
                found.append(word)
        logger.debug(f"Drew {len(found)} repeated-letter words (seed {self.seed})")
        return found
