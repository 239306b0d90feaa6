"""Degenerate trigonometric and hyperbolic functions.

All functions take a :class:`~degentrig.core.DegenContext` and a real
``x`` (scalar or numpy array). On the real branch
``e_lam^{xi}(a) = exp(i x omega)``, so ``cos_l(ctx, x) == cos(x * omega)``
and likewise for the others; the complex route through
:func:`~degentrig.core.degen_exp_complex` is kept for cross-checks.

Quotients raise :class:`PoleError` only when a denominator is exactly zero.
Accuracy degrades like ``1/|denominator|`` near poles.
"""

from __future__ import annotations

import numpy as np

from .core import DegenContext, degen_exp_complex
from .errors import PoleError


def _angle(ctx: DegenContext, x):
    return np.multiply(x, ctx.omega)


def _quotient(num, den, name: str):
    if np.any(den == 0.0):
        raise PoleError(f"{name}: denominator is exactly zero")
    return num / den


def cos_l(ctx: DegenContext, x):
    return np.cos(_angle(ctx, x))


def sin_l(ctx: DegenContext, x):
    return np.sin(_angle(ctx, x))


def tan_l(ctx: DegenContext, x):
    w = _angle(ctx, x)
    return _quotient(np.sin(w), np.cos(w), "tan_l")


def cot_l(ctx: DegenContext, x):
    w = _angle(ctx, x)
    return _quotient(np.cos(w), np.sin(w), "cot_l")


def cosh_l(ctx: DegenContext, x):
    return np.cosh(_angle(ctx, x))


def sinh_l(ctx: DegenContext, x):
    return np.sinh(_angle(ctx, x))


def tanh_l(ctx: DegenContext, x):
    w = _angle(ctx, x)
    return _quotient(np.sinh(w), np.cosh(w), "tanh_l")


def coth_l(ctx: DegenContext, x):
    w = _angle(ctx, x)
    return _quotient(np.cosh(w), np.sinh(w), "coth_l")


def d_cos_l(ctx: DegenContext, x):
    """d/dx cos_l = -omega * sin_l."""
    return -ctx.omega * sin_l(ctx, x)


def d_sin_l(ctx: DegenContext, x):
    """d/dx sin_l = omega * cos_l."""
    return ctx.omega * cos_l(ctx, x)


def cos_sin_complex(ctx: DegenContext, x: float) -> tuple[float, float]:
    """(cos_l, sin_l) at a scalar ``x`` built literally from ``e_lam^{+-xi}(a)``."""
    ep = degen_exp_complex(1j * x, ctx.lam, ctx.a)
    em = degen_exp_complex(-1j * x, ctx.lam, ctx.a)
    c = (ep + em) / 2
    s = (ep - em) / 2j
    return c.real, s.real


FUNCTIONS = {
    "cos": cos_l,
    "sin": sin_l,
    "tan": tan_l,
    "cot": cot_l,
    "cosh": cosh_l,
    "sinh": sinh_l,
    "tanh": tanh_l,
    "coth": coth_l,
}
