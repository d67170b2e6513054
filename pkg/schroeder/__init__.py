"""
Schroeder Hopf Toolkit
======================

Exact rational computations in the double tensor Hopf algebra on words:

- Schroeder trees, their skeletons, linearizations and Murua coefficients
- non-crossing, interval and monotone partitions and their Moebius functions
- coproducts, half-coproducts and four independent antipodes
- free, Boolean and monotone cumulants, convolution inverses and free Wick
  polynomials, each computed by several formulas
- a verification suite that cross-checks all of the above
"""

from importlib import import_module
from typing import Any

__version__ = "0.1.0"

_EXPORTS = {
    'SchroederTree': '.combinatorics.trees',
    'enum_schroder': '.combinatorics.trees',
    'parse_tree': '.combinatorics.trees',
    'NcPartition': '.combinatorics.partitions',
    'TensorElement': '.hopf.tensor',
    'antipode': '.hopf.antipode',
    'coproduct': '.hopf.coproduct',
    'MomentFunctional': '.ncprob.functionals',
    'cumulants_from_moments': '.ncprob.cumulants',
    'moments_from_cumulants': '.ncprob.cumulants',
    'conv_inverse': '.ncprob.cumulants',
    'wick': '.ncprob.wick',
    'VerificationSuite': '.verification.suite',
}

__all__ = list(_EXPORTS)


def __getattr__(name: str) -> Any:
    if name in _EXPORTS:
        module = import_module(_EXPORTS[name], __name__)
        return getattr(module, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
