"""Enumeration of every checkable identity."""

from __future__ import annotations

import enum


class IdentityId(enum.Enum):
    """Each member carries ``(anchor, params, exact_capable)``.

    ``params`` names the free integers the identity needs (``m``, ``n`` or
    ``k``); ``exact_capable`` marks identities that live entirely in the
    power-series ring in ``a`` and admit a coefficient-exact check.
    """

    PYTHAGOREAN = ("sin_l^2 + cos_l^2 = 1", (), True)
    DOUBLE_ANGLE_COS = ("cos_l(2x) = 1 - 2 sin_l^2(x) = 2 cos_l^2(x) - 1", (), True)
    DOUBLE_ANGLE_SIN = ("sin_l(2x) = 2 sin_l(x) cos_l(x)", (), True)
    ADDITION_SIN = ("sin_l(x +- y) = sin_l(x) cos_l(y) +- cos_l(x) sin_l(y)", (), True)
    ADDITION_COS = ("cos_l(x +- y) = cos_l(x) cos_l(y) -+ sin_l(x) sin_l(y)", (), True)
    DERIV_COS = ("d/dx cos_l(x) = -omega sin_l(x)", (), False)
    DERIV_SIN = ("d/dx sin_l(x) = omega cos_l(x)", (), False)
    COS_PRODUCT = ("prod_j cos_l(t + j pi/(2m omega)) = (-1)^m 2^(1-2m) sin_l(2mt)", ("m",), False)
    SIN_PRODUCT = ("prod_j sin_l(t + j pi/(2m omega)) = 2^(1-2m) sin_l(2mt)", ("m",), False)
    LOG_ABS_COS_SUM = ("log|2^(1-2m) sin_l(2mt)| = sum_j log|cos_l(t + j pi/(2m omega))|", ("m",), False)
    LOG_ABS_SIN_SUM = ("log|2^(1-2m) sin_l(2mt)| = sum_j log|sin_l(t + j pi/(2m omega))|", ("m",), False)
    TAN_SUM = ("-2m cot_l(2mt) = sum_j tan_l(t + j pi/(2m omega))", ("m",), False)
    COT_SUM = ("2m cot_l(2mt) = sum_j cot_l(t + j pi/(2m omega))", ("m",), False)
    TAN_SHIFT_REMARK = ("tan_l(t + j pi/(2m omega)) = tan(t omega + j pi/(2m))", ("m",), False)
    TRIPLE_RECURRENCE = ("cos_l((k+1)x) + cos_l((k-1)x) = 2 cos_l(kx) cos_l(x)", ("k",), True)
    MULTI_ANGLE_COS = ("cos_l(nx) = T_n(cos_l(x))", ("n",), True)
    SIN_TELESCOPE = ("sin_l((2k+1)x) - sin_l((2k-1)x) = 2 cos_l(2kx) sin_l(x)", ("k",), True)
    COS2K_VIA_T = ("cos_l(2kx) = T_k(cos_l(2x)) = T_k(1 - 2 sin_l^2(x))", ("k",), True)
    SIN_ODD_SUM = ("sin_l((2m+1)x) = sin_l(x) (1 + 2 sum_k T_k(1 - 2 sin_l^2(x)))", ("m",), True)
    SIN_ODD_PRODUCT = ("sin_l((2m+1)x) = (2m+1) sin_l(x) prod_k (1 - sin_l^2(x)/sin^2(k pi/(2m+1)))", ("m",), False)
    HYPERBOLIC_UNIT = ("cosh_l^2 - sinh_l^2 = 1", (), True)
    CLASSICAL_LIMIT = ("lambda -> 0: cos_l(x:a) -> cos(ax), sin_l(x:a) -> sin(ax), classical multiple-angle formulas", ("m",), False)

    def __init__(self, anchor: str, params: tuple[str, ...], exact_capable: bool) -> None:
        self.anchor = anchor
        self.params = params
        self.exact_capable = exact_capable


EXACT_CAPABLE = tuple(i for i in IdentityId if i.exact_capable)
