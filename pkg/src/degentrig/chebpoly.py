"""Chebyshev-type polynomials ``T_n`` and the odd-multiple sine polynomials ``K_m``.

``T_n`` satisfies ``cos_l(n x) = T_n(cos_l(x))`` and is generated by
``T_{k+1}(y) = 2 y T_k(y) - T_{k-1}(y)`` with exact integer coefficients.
``K_m`` satisfies ``sin_l((2m+1) x) = sin_l(x) K_m(sin_l(x)^2)`` and is kept
in product form over its zeros ``sin^2(k pi / (2m+1))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._backend import kernels


@dataclass(frozen=True)
class ChebCoeffs:
    """Integer coefficients of ``T_n``; ``coeffs[j]`` multiplies ``y**j``."""

    n: int
    coeffs: tuple[int, ...]

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def horner(self, y):
        """Evaluate from the power-basis coefficients (reference path)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * y + c
        return acc


@lru_cache(maxsize=None)
def cheb_coeffs(n: int) -> ChebCoeffs:
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev, cur = [1], [0, 1]
    if n == 0:
        return ChebCoeffs(0, (1,))
    for _ in range(n - 1):
        nxt = [0] + [2 * c for c in cur]
        for j, c in enumerate(prev):
            nxt[j] -= c
        prev, cur = cur, nxt
    return ChebCoeffs(n, tuple(cur))


def clenshaw(coeffs, y):
    """Evaluate ``sum_k coeffs[k] T_k(y)`` by Clenshaw's recurrence."""
    out = kernels.clenshaw(np.asarray(coeffs, dtype=np.float64), np.asarray(y, dtype=np.float64))
    return out[()] if np.ndim(out) == 0 else out


def cheb_eval(n: int, y):
    """``T_n(y)`` via ``b_k = 2 y b_{k+1} - b_{k+2}``; stable for ``|y| <= 1``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    unit = np.zeros(n + 1)
    unit[n] = 1.0
    return clenshaw(unit, y)


@dataclass(frozen=True)
class KmPoly:
    m: int
    zeros: tuple[float, ...]
    leading_constant: float

    def __call__(self, s):
        return km_eval(self, s)


@lru_cache(maxsize=None)
def km_build(m: int) -> KmPoly:
    if m < 1:
        raise ValueError("m must be >= 1")
    q = 2 * m + 1
    zeros = tuple(math.sin(k * math.pi / q) ** 2 for k in range(1, m + 1))
    return KmPoly(m, zeros, float(q))


def km_eval(poly: KmPoly, s):
    """``(2m+1) * prod_k (1 - s / zero_k)``."""
    out = kernels.km_product(np.asarray(poly.zeros), poly.leading_constant, np.asarray(s, dtype=np.float64))
    return out[()] if np.ndim(out) == 0 else out


def sin_odd_sum_coeffs(m: int) -> np.ndarray:
    """Chebyshev-basis coefficients of ``1 + 2 sum_{k=1}^m T_k``."""
    c = np.full(m + 1, 2.0)
    c[0] = 1.0
    return c
