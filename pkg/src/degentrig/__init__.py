"""Degenerate trigonometric functions and verification of their identities."""

from ._backend import BACKEND
from .chebpoly import ChebCoeffs, KmPoly, cheb_coeffs, cheb_eval, km_build, km_eval
from .core import (
    DegenContext,
    degen_exp_closed,
    degen_exp_complex,
    degen_exp_series,
    falling_factorial,
    falling_factorial_complex,
    omega,
)
from .errors import (
    ConvergenceWarning,
    DomainError,
    EmptyGridError,
    NonInvertibleError,
    NotExactCapableError,
    OrderMismatchError,
    ParamError,
    PoleError,
)
from .trig import (
    cos_l,
    cosh_l,
    cot_l,
    coth_l,
    d_cos_l,
    d_sin_l,
    sin_l,
    sinh_l,
    tan_l,
    tanh_l,
)

__version__ = "0.1.0"
