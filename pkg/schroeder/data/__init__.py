"""JSON formats and table fixtures."""

from .io import (
    element_from_json,
    element_to_json,
    load_cumulants,
    load_moments,
    save_cumulants,
    save_moments,
)
from .generators import (
    RandomTableGenerator,
    constant_moments,
    moments_from_sequence,
    semicircle_moments,
)

__all__ = [
    'element_from_json',
    'element_to_json',
    'load_cumulants',
    'load_moments',
    'save_cumulants',
    'save_moments',
    'RandomTableGenerator',
    'constant_moments',
    'moments_from_sequence',
    'semicircle_moments',
]
