"""Exact truncated power series in ``a`` with Gaussian-rational coefficients.

Used to certify the identities that are polynomial in the series ring:
for fixed rational ``x``, ``y`` and ``lambda`` both sides are expanded to
order ``N`` and compared coefficient by coefficient, with no rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, NamedTuple, Sequence

from .catalog import IdentityId
from .chebpoly import ChebCoeffs, cheb_coeffs
from .errors import (
    NonInvertibleError,
    NotExactCapableError,
    OrderMismatchError,
    ParamError,
)

Rational = Fraction

DEFAULT_ORDER = 32


class GaussianRational:
    """Exact complex number ``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, v) -> "GaussianRational":
        if isinstance(v, GaussianRational):
            return v
        if isinstance(v, complex):
            return cls(Fraction(v.real), Fraction(v.imag))
        return cls(v, 0)

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        if not self.im and not o.im:
            return GaussianRational(self.re * o.re, Fraction(0))
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        den = o.re * o.re + o.im * o.im
        if not den:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num.re / den, num.im / den)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if not self.im:
            return f"GaussianRational({self.re})"
        return f"GaussianRational({self.re}, {self.im})"


I = GaussianRational(0, 1)
_ZERO = GaussianRational(0, 0)
_ONE = GaussianRational(1, 0)


def _common_denominator(parts: Sequence[Fraction]) -> tuple[list[int], int]:
    den = math.lcm(*(p.denominator for p in parts)) if parts else 1
    return [p.numerator * (den // p.denominator) for p in parts], den


def _convolve(u: list[int], v: list[int], size: int) -> list[int]:
    out = [0] * size
    for i, ui in enumerate(u[:size]):
        if not ui:
            continue
        for j in range(min(len(v), size - i)):
            out[i + j] += ui * v[j]
    return out


class FormalSeries:
    """Power series ``sum_{n<=N} coeffs[n] a^n`` truncated at order ``N``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = tuple(GaussianRational.coerce(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least one coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, value, order: int) -> "FormalSeries":
        return cls([value] + [0] * order)

    @classmethod
    def variable(cls, order: int) -> "FormalSeries":
        """The series ``a`` itself."""
        return cls([0, 1] + [0] * (order - 1)) if order >= 1 else cls([0])

    def is_real(self) -> bool:
        return not any(c.im for c in self.coeffs)

    def _check(self, other: "FormalSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(f"orders {self.order} and {other.order} differ")

    def __add__(self, other):
        if not isinstance(other, FormalSeries):
            return self + FormalSeries.constant(other, self.order)
        self._check(other)
        return FormalSeries([p + q for p, q in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, FormalSeries):
            return self - FormalSeries.constant(other, self.order)
        self._check(other)
        return FormalSeries([p - q for p, q in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return FormalSeries.constant(other, self.order) - self

    def __neg__(self):
        return FormalSeries([-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, FormalSeries):
            return series_scale(other, self)
        self._check(other)
        size = len(self.coeffs)
        ar, da = _common_denominator([c.re for c in self.coeffs])
        br, db = _common_denominator([c.re for c in other.coeffs])
        den = da * db
        a_real, b_real = self.is_real(), other.is_real()
        if a_real and b_real:
            re = _convolve(ar, br, size)
            return FormalSeries(GaussianRational(Fraction(r, den), Fraction(0)) for r in re)
        ai, dai = _common_denominator([c.im for c in self.coeffs])
        bi, dbi = _common_denominator([c.im for c in other.coeffs])
        # bring the four parts onto one denominator
        a_den = math.lcm(da, dai)
        b_den = math.lcm(db, dbi)
        ar = [v * (a_den // da) for v in ar]
        ai = [v * (a_den // dai) for v in ai]
        br = [v * (b_den // db) for v in br]
        bi = [v * (b_den // dbi) for v in bi]
        den = a_den * b_den
        rr, ii = _convolve(ar, br, size), _convolve(ai, bi, size)
        ri, ir = _convolve(ar, bi, size), _convolve(ai, br, size)
        return FormalSeries(
            GaussianRational(Fraction(p - q, den), Fraction(r + s, den))
            for p, q, r, s in zip(rr, ii, ri, ir)
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, FormalSeries):
            return series_scale(_ONE / GaussianRational.coerce(other), self)
        return series_div(self, other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = FormalSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def first_nonzero(self) -> int | None:
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def evaluate(self, a0: float) -> complex:
        """Horner evaluation in floating point at ``a = a0``."""
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * a0 + complex(c)
        return acc

    def __repr__(self):
        return f"FormalSeries({list(self.coeffs)!r})"


def series_add(lhs: FormalSeries, rhs: FormalSeries) -> FormalSeries:
    return lhs + rhs


def series_sub(lhs: FormalSeries, rhs: FormalSeries) -> FormalSeries:
    return lhs - rhs


def series_mul(lhs: FormalSeries, rhs: FormalSeries) -> FormalSeries:
    return lhs * rhs


def series_scale(s, f: FormalSeries) -> FormalSeries:
    g = GaussianRational.coerce(s)
    return FormalSeries([g * c for c in f.coeffs])


def series_div(num: FormalSeries, den: FormalSeries) -> FormalSeries:
    """Exact long division; the divisor needs a nonzero constant term."""
    num._check(den)
    g0 = den.coeffs[0]
    if not g0:
        raise NonInvertibleError("divisor series has zero constant term")
    q: list[GaussianRational] = []
    for n, fn in enumerate(num.coeffs):
        acc = fn
        for j in range(1, n + 1):
            gj = den.coeffs[j]
            if gj:
                acc = acc - gj * q[n - j]
        q.append(acc / g0)
    return FormalSeries(q)


def _rational(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@lru_cache(maxsize=512)
def _degen_exp_cached(z: GaussianRational, lam: Fraction, order: int) -> FormalSeries:
    coeffs = [_ONE]
    c = _ONE
    for n in range(1, order + 1):
        c = c * (z - (n - 1) * lam) / n
        coeffs.append(c)
    return FormalSeries(coeffs)


def series_degen_exp(z, lam, order: int) -> FormalSeries:
    """``e_lam^z(a)`` as a series in ``a``: coefficient ``n`` is ``(z)_{n,lam} / n!``."""
    lam = _rational(lam)
    if not lam:
        raise ValueError("lambda must be nonzero")
    if order < 0:
        raise ValueError("order must be nonnegative")
    return _degen_exp_cached(GaussianRational.coerce(z), lam, order)


class SinCos(NamedTuple):
    sin: FormalSeries
    cos: FormalSeries


def _real_part(f: FormalSeries) -> FormalSeries:
    if not f.is_real():
        raise AssertionError("expected a real series")
    return f


@lru_cache(maxsize=1024)
def _sin_cos_cached(x: Fraction, lam: Fraction, order: int) -> SinCos:
    ep = series_degen_exp(GaussianRational(0, x), lam, order)
    em = series_degen_exp(GaussianRational(0, -x), lam, order)
    cos = series_scale(Fraction(1, 2), ep + em)
    sin = series_scale(GaussianRational(0, Fraction(-1, 2)), ep - em)  # (.)/(2i)
    return SinCos(_real_part(sin), _real_part(cos))


def series_sin_cos(x, lam, order: int) -> SinCos:
    """``(sin_l(x:a), cos_l(x:a))`` built from ``e_lam^{+-xi}(a)``."""
    return _sin_cos_cached(_rational(x), _rational(lam), order)


def series_sinh_cosh(x, lam, order: int) -> tuple[FormalSeries, FormalSeries]:
    x, lam = _rational(x), _rational(lam)
    ep = series_degen_exp(x, lam, order)
    em = series_degen_exp(-x, lam, order)
    half = Fraction(1, 2)
    return series_scale(half, ep - em), series_scale(half, ep + em)


def series_poly_apply(coeffs: ChebCoeffs | Sequence[int], f: FormalSeries) -> FormalSeries:
    """Horner evaluation of an integer polynomial at a series."""
    cs = coeffs.coeffs if isinstance(coeffs, ChebCoeffs) else tuple(coeffs)
    acc = FormalSeries.constant(cs[-1], f.order)
    for c in reversed(cs[:-1]):
        acc = acc * f + c
    return acc


def sin_odd_sum_poly(m: int) -> tuple[int, ...]:
    """Power-basis coefficients of ``1 + 2 sum_{k=1}^m T_k``."""
    out = [0] * (m + 1)
    out[0] = 1
    for k in range(1, m + 1):
        for j, c in enumerate(cheb_coeffs(k).coeffs):
            out[j] += 2 * c
    return tuple(out)


# -- exact identity checks -------------------------------------------------

Pairs = list[tuple[FormalSeries, FormalSeries]]


def _need(params: dict, name: str) -> int:
    try:
        v = int(params[name])
    except (KeyError, TypeError):
        raise ParamError(f"missing integer parameter {name!r}") from None
    if v < 1:
        raise ParamError(f"parameter {name!r} must be >= 1")
    return v


def _pythagorean(x, y, lam, params, order) -> Pairs:
    s, c = series_sin_cos(x, lam, order)
    return [(s * s + c * c, FormalSeries.constant(1, order))]


def _double_cos(x, y, lam, params, order) -> Pairs:
    s, c = series_sin_cos(x, lam, order)
    c2 = series_sin_cos(2 * x, lam, order).cos
    return [(c2, 1 - 2 * (s * s)), (c2, 2 * (c * c) - 1)]


def _double_sin(x, y, lam, params, order) -> Pairs:
    s, c = series_sin_cos(x, lam, order)
    return [(series_sin_cos(2 * x, lam, order).sin, 2 * (s * c))]


def _addition_sin(x, y, lam, params, order) -> Pairs:
    sx, cx = series_sin_cos(x, lam, order)
    sy, cy = series_sin_cos(y, lam, order)
    a, b = sx * cy, cx * sy
    return [
        (series_sin_cos(x + y, lam, order).sin, a + b),
        (series_sin_cos(x - y, lam, order).sin, a - b),
    ]


def _addition_cos(x, y, lam, params, order) -> Pairs:
    sx, cx = series_sin_cos(x, lam, order)
    sy, cy = series_sin_cos(y, lam, order)
    a, b = cx * cy, sx * sy
    return [
        (series_sin_cos(x + y, lam, order).cos, a - b),
        (series_sin_cos(x - y, lam, order).cos, a + b),
    ]


def _triple(x, y, lam, params, order) -> Pairs:
    k = _need(params, "k")
    cos = lambda v: series_sin_cos(v, lam, order).cos  # noqa: E731
    return [(cos((k + 1) * x) + cos((k - 1) * x), 2 * (cos(k * x) * cos(x)))]


def _multi_angle(x, y, lam, params, order) -> Pairs:
    n = _need(params, "n")
    c = series_sin_cos(x, lam, order).cos
    return [(series_sin_cos(n * x, lam, order).cos, series_poly_apply(cheb_coeffs(n), c))]


def _telescope(x, y, lam, params, order) -> Pairs:
    k = _need(params, "k")
    sin = lambda v: series_sin_cos(v, lam, order).sin  # noqa: E731
    c2k = series_sin_cos(2 * k * x, lam, order).cos
    return [(sin((2 * k + 1) * x) - sin((2 * k - 1) * x), 2 * (c2k * sin(x)))]


def _cos2k(x, y, lam, params, order) -> Pairs:
    k = _need(params, "k")
    s = series_sin_cos(x, lam, order).sin
    c2 = series_sin_cos(2 * x, lam, order).cos
    lhs = series_sin_cos(2 * k * x, lam, order).cos
    tk = cheb_coeffs(k)
    return [(lhs, series_poly_apply(tk, c2)), (lhs, series_poly_apply(tk, 1 - 2 * (s * s)))]


def _sin_odd_sum(x, y, lam, params, order) -> Pairs:
    m = _need(params, "m")
    s = series_sin_cos(x, lam, order).sin
    rhs = s * series_poly_apply(sin_odd_sum_poly(m), 1 - 2 * (s * s))
    return [(series_sin_cos((2 * m + 1) * x, lam, order).sin, rhs)]


def _hyperbolic(x, y, lam, params, order) -> Pairs:
    sh, ch = series_sinh_cosh(x, lam, order)
    return [(ch * ch - sh * sh, FormalSeries.constant(1, order))]


ExactCheck = Callable[[Fraction, Fraction, Fraction, dict, int], Pairs]

EXACT_CHECKS: dict[IdentityId, ExactCheck] = {
    IdentityId.PYTHAGOREAN: _pythagorean,
    IdentityId.DOUBLE_ANGLE_COS: _double_cos,
    IdentityId.DOUBLE_ANGLE_SIN: _double_sin,
    IdentityId.ADDITION_SIN: _addition_sin,
    IdentityId.ADDITION_COS: _addition_cos,
    IdentityId.TRIPLE_RECURRENCE: _triple,
    IdentityId.MULTI_ANGLE_COS: _multi_angle,
    IdentityId.SIN_TELESCOPE: _telescope,
    IdentityId.COS2K_VIA_T: _cos2k,
    IdentityId.SIN_ODD_SUM: _sin_odd_sum,
    IdentityId.HYPERBOLIC_UNIT: _hyperbolic,
}


class ExactResult(NamedTuple):
    passed: bool
    first_failing_coefficient: int | None


def verify_exact(
    id: IdentityId,
    x,
    y,
    lam,
    params: dict | None = None,
    order: int = DEFAULT_ORDER,
) -> ExactResult:
    """Check ``LHS - RHS == 0`` coefficient by coefficient up to ``order``."""
    if id not in EXACT_CHECKS:
        raise NotExactCapableError(f"{id.name} has no exact series check")
    lam = _rational(lam)
    if not lam:
        raise ValueError("lambda must be nonzero")
    if order < 0:
        raise ValueError("order must be nonnegative")
    pairs = EXACT_CHECKS[id](_rational(x), _rational(y), lam, dict(params or {}), order)
    first = None
    for lhs, rhs in pairs:
        idx = (lhs - rhs).first_nonzero()
        if idx is not None and (first is None or idx < first):
            first = idx
    return ExactResult(first is None, first)


@dataclass(frozen=True)
class RationalTriple:
    x: Fraction
    y: Fraction
    lam: Fraction


RATIONAL_TRIPLES: tuple[RationalTriple, ...] = (
    RationalTriple(Fraction(1), Fraction(1, 2), Fraction(1)),
    RationalTriple(Fraction(2, 3), Fraction(1, 5), Fraction(-1, 2)),
    RationalTriple(Fraction(-3, 4), Fraction(5, 7), Fraction(1, 3)),
    RationalTriple(Fraction(1, 2), Fraction(-2), Fraction(-1, 4)),
    RationalTriple(Fraction(3), Fraction(1, 3), Fraction(2)),
    RationalTriple(Fraction(5, 4), Fraction(2, 9), Fraction(-3, 5)),
)

# parameter ranges swept by the certificate run
EXACT_PARAM_RANGES: dict[IdentityId, list[dict]] = {
    IdentityId.TRIPLE_RECURRENCE: [{"k": k} for k in range(1, 9)],
    IdentityId.MULTI_ANGLE_COS: [{"n": n} for n in range(1, 9)],
    IdentityId.SIN_TELESCOPE: [{"k": k} for k in range(1, 9)],
    IdentityId.COS2K_VIA_T: [{"k": k} for k in range(1, 9)],
    IdentityId.SIN_ODD_SUM: [{"m": m} for m in range(1, 7)],
}


class Certificate(NamedTuple):
    id: IdentityId
    params: dict
    x: Fraction
    y: Fraction
    lam: Fraction
    order: int
    passed: bool
    first_failing_coefficient: int | None


def certify_all(order: int = DEFAULT_ORDER, triples: Sequence[RationalTriple] = RATIONAL_TRIPLES) -> list[Certificate]:
    """Run every exact check over the rational triple table."""
    out = []
    for ident in EXACT_CHECKS:
        for params in EXACT_PARAM_RANGES.get(ident, [{}]):
            for tr in triples:
                res = verify_exact(ident, tr.x, tr.y, tr.lam, params, order)
                out.append(Certificate(ident, params, tr.x, tr.y, tr.lam, order, res.passed, res.first_failing_coefficient))
    return out
