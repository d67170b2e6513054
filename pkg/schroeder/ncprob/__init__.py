"""Moments, cumulants and free Wick polynomials on the double tensor Hopf algebra."""

from .functionals import (
    Character,
    CumulantFunctional,
    Functional,
    InfinitesimalCharacter,
    MomentFunctional,
    conv_exp,
    conv_log,
    convolve,
    exp_left,
    exp_right,
    half_shuffle_left,
    half_shuffle_right,
)
from .cumulants import (
    conv_inverse,
    cumulants_from_moments,
    moments_from_cumulants,
    murua_table,
    solve_left_fixed_point,
    solve_right_fixed_point,
)
from .wick import wick

__all__ = [
    'Character',
    'CumulantFunctional',
    'Functional',
    'InfinitesimalCharacter',
    'MomentFunctional',
    'conv_exp',
    'conv_log',
    'convolve',
    'exp_left',
    'exp_right',
    'half_shuffle_left',
    'half_shuffle_right',
    'conv_inverse',
    'cumulants_from_moments',
    'moments_from_cumulants',
    'murua_table',
    'solve_left_fixed_point',
    'solve_right_fixed_point',
    'wick',
]
