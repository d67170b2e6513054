"""The double tensor Hopf algebra on words and its commutative quotient."""

from .tensor import TensorElement, bar_product, parse_word, pretty
from .coproduct import (
    coproduct,
    half_coproduct_left,
    half_coproduct_right,
    iterated_reduced_coproduct,
    reduced_coproduct,
)
from .antipode import antipode

__all__ = [
    'TensorElement',
    'bar_product',
    'parse_word',
    'pretty',
    'coproduct',
    'half_coproduct_left',
    'half_coproduct_right',
    'iterated_reduced_coproduct',
    'reduced_coproduct',
    'antipode',
]
