"""Float verification of every identity over pole-filtered sample grids.

Each identity is a :class:`FloatCheck`: a function returning the
``(lhs, rhs)`` array pairs to compare and, optionally, a function
returning the denominators (or log arguments) that must stay at least
``pole_margin`` away from zero. Residuals are normalised as
``|lhs - rhs| / max(|lhs|, |rhs|, 1)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

import numpy as np
from scipy.stats import qmc

from .catalog import IdentityId
from .chebpoly import cheb_eval, clenshaw, km_build, km_eval, sin_odd_sum_coeffs
from .core import DegenContext
from .errors import DomainError, EmptyGridError, ParamError
from .trig import cos_l, cosh_l, cot_l, d_cos_l, d_sin_l, sin_l, sinh_l, tan_l

DEFAULT_TOLERANCE = 1e-10
DEFAULT_POLE_MARGIN = 1e-3
DEFAULT_POINTS = 128
DERIV_STEP = 1e-5
LIMIT_LAMBDA = 1e-12

CONTEXT_LAMBDAS = (0.5, -0.5, 0.1, -0.1, 1.0, 2.0)
CONTEXT_AS = (0.3, 1.0, math.e - 1.0, 2.5)


def default_contexts() -> tuple[DegenContext, ...]:
    """The (lambda, a) table restricted to ``1 + lambda*a > 0``."""
    return tuple(
        DegenContext(lam, a) for lam in CONTEXT_LAMBDAS for a in CONTEXT_AS if 1.0 + lam * a > 0.0
    )


@dataclass(frozen=True)
class SampleGrid:
    """Sample points for a list of contexts.

    ``x_points`` and ``y_points`` are phases in (-1, 1), ``points_per_context``
    consecutive entries per context (in ``contexts`` order). In its context a
    phase maps to ``phase * pi / omega``, so each context covers one period.
    """

    x_points: tuple[float, ...]
    y_points: tuple[float, ...]
    contexts: tuple[DegenContext, ...]
    pole_margin: float = DEFAULT_POLE_MARGIN
    seed: int = 0

    @property
    def points_per_context(self) -> int:
        return len(self.x_points) // max(len(self.contexts), 1)

    def scaled(self, index: int) -> tuple[np.ndarray, np.ndarray]:
        """Sample arguments ``(x, y)`` for ``contexts[index]``."""
        ctx = self.contexts[index]
        n = self.points_per_context
        sl = slice(index * n, (index + 1) * n)
        s = math.pi / ctx.omega
        return np.asarray(self.x_points[sl]) * s, np.asarray(self.y_points[sl]) * s


def make_grid(
    contexts: Sequence[DegenContext] | None = None,
    n_points: int = DEFAULT_POINTS,
    pole_margin: float = DEFAULT_POLE_MARGIN,
    seed: int = 0,
) -> SampleGrid:
    """Scrambled Halton points, ``n_points`` per context, reproducible from ``seed``."""
    if n_points < 1:
        raise ValueError("n_points must be positive")
    ctxs = tuple(contexts) if contexts is not None else default_contexts()
    pts = qmc.Halton(d=2, scramble=True, seed=seed).random(n_points * len(ctxs))
    u = 2.0 * pts - 1.0
    return SampleGrid(tuple(u[:, 0].tolist()), tuple(u[:, 1].tolist()), ctxs, float(pole_margin), int(seed))


# -- identity definitions ----------------------------------------------------

Pairs = list[tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True)
class FloatCheck:
    evaluate: Callable[[DegenContext, np.ndarray, np.ndarray, dict], Pairs]
    denominators: Callable[[DegenContext, np.ndarray, np.ndarray, dict], list] | None = None


def _param(params: dict, name: str) -> int:
    try:
        v = int(params[name])
    except (KeyError, TypeError):
        raise ParamError(f"missing integer parameter {name!r}") from None
    if v < 1:
        raise ParamError(f"parameter {name!r} must be >= 1")
    return v


def shift(ctx: DegenContext, m: int, j: int) -> float:
    """The argument shift ``j pi / (2m omega)``."""
    return j * math.pi / (2 * m * ctx.omega)


def cos_product_constant(m: int) -> float:
    return (-1) ** m * 2.0 ** (1 - 2 * m)


def sin_product_constant(m: int) -> float:
    return 2.0 ** (1 - 2 * m)


def cos_product_prefactor(m: int) -> complex:
    """``-(i / 2^(2m-1)) e^(-m pi i) e^(pi i / 2)`` evaluated in complex arithmetic."""
    return -(1j / 2 ** (2 * m - 1)) * cmath.exp(-m * math.pi * 1j) * cmath.exp(math.pi / 2 * 1j)


def sin_product_prefactor(m: int) -> complex:
    return (-1) ** m * cos_product_prefactor(m)


def _pythagorean(ctx, x, y, p):
    s, c = sin_l(ctx, x), cos_l(ctx, x)
    return [(s * s + c * c, np.ones_like(x))]


def _double_cos(ctx, x, y, p):
    s, c = sin_l(ctx, x), cos_l(ctx, x)
    c2 = cos_l(ctx, 2 * x)
    return [(c2, 1 - 2 * s * s), (c2, 2 * c * c - 1)]


def _double_sin(ctx, x, y, p):
    return [(sin_l(ctx, 2 * x), 2 * sin_l(ctx, x) * cos_l(ctx, x))]


def _addition_sin(ctx, x, y, p):
    a = sin_l(ctx, x) * cos_l(ctx, y)
    b = cos_l(ctx, x) * sin_l(ctx, y)
    return [(sin_l(ctx, x + y), a + b), (sin_l(ctx, x - y), a - b)]


def _addition_cos(ctx, x, y, p):
    a = cos_l(ctx, x) * cos_l(ctx, y)
    b = sin_l(ctx, x) * sin_l(ctx, y)
    return [(cos_l(ctx, x + y), a - b), (cos_l(ctx, x - y), a + b)]


def central_difference(f, x, h):
    # step rounded so that x + h and x - h are exact offsets
    hp = (x + h) - x
    hm = x - (x - h)
    return (f(x + hp) - f(x - hm)) / (hp + hm)


def richardson_derivative(f, x, h=DERIV_STEP):
    d1 = central_difference(f, x, h)
    d2 = central_difference(f, x, h / 2)
    return (4 * d2 - d1) / 3


def _deriv_cos(ctx, x, y, p):
    return [(richardson_derivative(lambda v: cos_l(ctx, v), x), d_cos_l(ctx, x))]


def _deriv_sin(ctx, x, y, p):
    return [(richardson_derivative(lambda v: sin_l(ctx, v), x), d_sin_l(ctx, x))]


def _shifted(ctx, t, m, fn):
    return [fn(ctx, t + shift(ctx, m, j)) for j in range(2 * m)]


def _cos_product(ctx, t, y, p):
    m = _param(p, "m")
    lhs = np.prod(_shifted(ctx, t, m, cos_l), axis=0)
    s2m = sin_l(ctx, 2 * m * t)
    return [(lhs, cos_product_constant(m) * s2m), (lhs, cos_product_prefactor(m) * s2m)]


def _sin_product(ctx, t, y, p):
    m = _param(p, "m")
    lhs = np.prod(_shifted(ctx, t, m, sin_l), axis=0)
    s2m = sin_l(ctx, 2 * m * t)
    return [(lhs, sin_product_constant(m) * s2m), (lhs, sin_product_prefactor(m) * s2m)]


def _log_abs_lhs(ctx, t, m):
    return np.log(np.abs(2.0 ** (1 - 2 * m) * sin_l(ctx, 2 * m * t)))


def _log_abs_cos(ctx, t, y, p):
    m = _param(p, "m")
    rhs = np.sum([np.log(np.abs(v)) for v in _shifted(ctx, t, m, cos_l)], axis=0)
    return [(_log_abs_lhs(ctx, t, m), rhs)]


def _log_abs_sin(ctx, t, y, p):
    m = _param(p, "m")
    rhs = np.sum([np.log(np.abs(v)) for v in _shifted(ctx, t, m, sin_l)], axis=0)
    return [(_log_abs_lhs(ctx, t, m), rhs)]


def _tan_sum(ctx, t, y, p):
    m = _param(p, "m")
    return [(-2 * m * cot_l(ctx, 2 * m * t), np.sum(_shifted(ctx, t, m, tan_l), axis=0))]


def _cot_sum(ctx, t, y, p):
    m = _param(p, "m")
    return [(2 * m * cot_l(ctx, 2 * m * t), np.sum(_shifted(ctx, t, m, cot_l), axis=0))]


def _tan_shift(ctx, t, y, p):
    m = _param(p, "m")
    return [
        (tan_l(ctx, t + shift(ctx, m, j)), np.tan(t * ctx.omega + j * math.pi / (2 * m)))
        for j in range(2 * m)
    ]


def _triple(ctx, x, y, p):
    k = _param(p, "k")
    return [(cos_l(ctx, (k + 1) * x) + cos_l(ctx, (k - 1) * x), 2 * cos_l(ctx, k * x) * cos_l(ctx, x))]


def _multi_angle(ctx, x, y, p):
    n = _param(p, "n")
    return [(cos_l(ctx, n * x), cheb_eval(n, cos_l(ctx, x)))]


def _telescope(ctx, x, y, p):
    k = _param(p, "k")
    lhs = sin_l(ctx, (2 * k + 1) * x) - sin_l(ctx, (2 * k - 1) * x)
    return [(lhs, 2 * cos_l(ctx, 2 * k * x) * sin_l(ctx, x))]


def _cos2k(ctx, x, y, p):
    k = _param(p, "k")
    lhs = cos_l(ctx, 2 * k * x)
    s = sin_l(ctx, x)
    return [(lhs, cheb_eval(k, cos_l(ctx, 2 * x))), (lhs, cheb_eval(k, 1 - 2 * s * s))]


def _sin_odd_sum(ctx, x, y, p):
    m = _param(p, "m")
    s = sin_l(ctx, x)
    rhs = s * clenshaw(sin_odd_sum_coeffs(m), 1 - 2 * s * s)
    return [(sin_l(ctx, (2 * m + 1) * x), rhs)]


def _sin_odd_product(ctx, x, y, p):
    m = _param(p, "m")
    s = sin_l(ctx, x)
    return [(sin_l(ctx, (2 * m + 1) * x), s * km_eval(km_build(m), s * s))]


def _hyperbolic(ctx, x, y, p):
    ch, sh = cosh_l(ctx, x), sinh_l(ctx, x)
    return [(ch * ch - sh * sh, np.ones_like(x))]


def _limit_context(ctx: DegenContext) -> DegenContext:
    return DegenContext(LIMIT_LAMBDA, ctx.a)


def _classical_limit(ctx, x, y, p):
    m = _param(p, "m")
    c0 = _limit_context(ctx)
    th = ctx.a * x
    shifts = [th + j * math.pi / (2 * m) for j in range(2 * m)]
    s = np.sin(th)
    return [
        (cos_l(c0, x), np.cos(th)),
        (sin_l(c0, x), np.sin(th)),
        (-2 * m / np.tan(2 * m * th), np.sum([np.tan(v) for v in shifts], axis=0)),
        (2 * m / np.tan(2 * m * th), np.sum([1 / np.tan(v) for v in shifts], axis=0)),
        (np.sin((2 * m + 1) * th), s * km_eval(km_build(m), s * s)),
    ]


def _dens_tan_sum(ctx, t, y, p):
    m = _param(p, "m")
    return [sin_l(ctx, 2 * m * t)] + _shifted(ctx, t, m, cos_l)


def _dens_cot_sum(ctx, t, y, p):
    m = _param(p, "m")
    return [sin_l(ctx, 2 * m * t)] + _shifted(ctx, t, m, sin_l)


def _dens_tan_shift(ctx, t, y, p):
    return _shifted(ctx, t, _param(p, "m"), cos_l)


def _dens_classical(ctx, x, y, p):
    m = _param(p, "m")
    th = ctx.a * x
    out = [np.sin(2 * m * th)]
    for j in range(2 * m):
        out += [np.cos(th + j * math.pi / (2 * m)), np.sin(th + j * math.pi / (2 * m))]
    return out


FLOAT_CHECKS: dict[IdentityId, FloatCheck] = {
    IdentityId.PYTHAGOREAN: FloatCheck(_pythagorean),
    IdentityId.DOUBLE_ANGLE_COS: FloatCheck(_double_cos),
    IdentityId.DOUBLE_ANGLE_SIN: FloatCheck(_double_sin),
    IdentityId.ADDITION_SIN: FloatCheck(_addition_sin),
    IdentityId.ADDITION_COS: FloatCheck(_addition_cos),
    IdentityId.DERIV_COS: FloatCheck(_deriv_cos),
    IdentityId.DERIV_SIN: FloatCheck(_deriv_sin),
    IdentityId.COS_PRODUCT: FloatCheck(_cos_product),
    IdentityId.SIN_PRODUCT: FloatCheck(_sin_product),
    IdentityId.LOG_ABS_COS_SUM: FloatCheck(_log_abs_cos, _dens_tan_sum),
    IdentityId.LOG_ABS_SIN_SUM: FloatCheck(_log_abs_sin, _dens_cot_sum),
    IdentityId.TAN_SUM: FloatCheck(_tan_sum, _dens_tan_sum),
    IdentityId.COT_SUM: FloatCheck(_cot_sum, _dens_cot_sum),
    IdentityId.TAN_SHIFT_REMARK: FloatCheck(_tan_shift, _dens_tan_shift),
    IdentityId.TRIPLE_RECURRENCE: FloatCheck(_triple),
    IdentityId.MULTI_ANGLE_COS: FloatCheck(_multi_angle),
    IdentityId.SIN_TELESCOPE: FloatCheck(_telescope),
    IdentityId.COS2K_VIA_T: FloatCheck(_cos2k),
    IdentityId.SIN_ODD_SUM: FloatCheck(_sin_odd_sum),
    IdentityId.SIN_ODD_PRODUCT: FloatCheck(_sin_odd_product),
    IdentityId.HYPERBOLIC_UNIT: FloatCheck(_hyperbolic),
    IdentityId.CLASSICAL_LIMIT: FloatCheck(_classical_limit, _dens_classical),
}


# -- reports -------------------------------------------------------------------


@dataclass
class IdentityReport:
    id: IdentityId
    params: dict
    n_samples: int
    max_abs_residual: float
    max_rel_residual: float
    tolerance: float
    passed: bool
    worst_point: dict = field(default_factory=dict)
    error: str | None = None

    def to_record(self) -> dict:
        """JSON-ready record; keys follow the report fields (``passed`` -> ``pass``)."""
        rec = {
            "id": self.id.name,
            "params": dict(self.params),
            "n_samples": self.n_samples,
            "max_abs_residual": _finite_or_none(self.max_abs_residual),
            "max_rel_residual": _finite_or_none(self.max_rel_residual),
            "tolerance": self.tolerance,
            "pass": self.passed,
            "worst_point": {k: float(v) for k, v in self.worst_point.items()},
        }
        if self.error is not None:
            rec["error"] = self.error
        return rec

    def csv_row(self) -> list[str]:
        """Row matching :data:`CSV_COLUMNS`; lambda/a/omega are the worst sample's context."""
        wp = self.worst_point

        def num(v):
            return "" if v is None else repr(float(v))

        return [
            self.id.name,
            str(self.params.get("m", "")),
            str(self.params.get("n", "")),
            str(self.params.get("k", "")),
            num(wp.get("lambda")),
            num(wp.get("a")),
            num(wp.get("omega")),
            str(self.n_samples),
            num(self.max_abs_residual),
            num(self.max_rel_residual),
            num(self.tolerance),
            "true" if self.passed else "false",
        ]


CSV_COLUMNS = (
    "id", "m", "n", "k", "lambda", "a", "omega", "n_samples",
    "max_abs_residual", "max_rel_residual", "tolerance", "pass",
)


def _finite_or_none(v: float) -> float | None:
    return float(v) if math.isfinite(v) else None


class AdmissibleSet(NamedTuple):
    ctx: DegenContext
    x: np.ndarray
    y: np.ndarray
    denominators: list


def admissible_points(id: IdentityId, params: dict, grid: SampleGrid) -> list[AdmissibleSet]:
    """Grid points per context whose denominators clear ``grid.pole_margin``."""
    check = FLOAT_CHECKS[id]
    out = []
    for index, ctx in enumerate(grid.contexts):
        x, y = grid.scaled(index)
        dens: list = []
        if check.denominators is not None:
            dens = [np.asarray(d) for d in check.denominators(ctx, x, y, params)]
            keep = np.ones(x.shape, dtype=bool)
            for d in dens:
                keep &= np.abs(d) >= grid.pole_margin
            x, y = x[keep], y[keep]
            dens = [d[keep] for d in dens]
        if x.size:
            out.append(AdmissibleSet(ctx, x, y, dens))
    return out


def _check_params(id: IdentityId, params: dict) -> dict:
    for name in id.params:
        _param(params, name)
    return {name: int(params[name]) for name in id.params}


def run_identity(
    id: IdentityId,
    params: dict | None = None,
    grid: SampleGrid | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> IdentityReport:
    """Evaluate both sides of ``id`` at every admissible point of ``grid``."""
    params = _check_params(id, dict(params or {}))
    grid = grid if grid is not None else make_grid()
    if not grid.contexts or not grid.x_points:
        raise EmptyGridError("grid has no points")
    sets = admissible_points(id, params, grid)
    if not sets:
        raise EmptyGridError(f"pole filtering removed every point for {id.name}")
    check = FLOAT_CHECKS[id]
    n = 0
    max_abs = -1.0
    max_rel = -1.0
    worst: dict = {}
    for ctx, x, y, _ in sets:
        abs_res = np.zeros(x.shape)
        rel_res = np.zeros(x.shape)
        for lhs, rhs in check.evaluate(ctx, x, y, params):
            diff = np.abs(lhs - rhs)
            scale = np.maximum(np.maximum(np.abs(lhs), np.abs(rhs)), 1.0)
            abs_res = np.maximum(abs_res, diff)
            rel_res = np.maximum(rel_res, diff / scale)
        # NaN residuals must fail, never hide behind max()
        rel_res = np.where(np.isnan(rel_res), np.inf, rel_res)
        abs_res = np.where(np.isnan(abs_res), np.inf, abs_res)
        n += x.size
        i = int(np.argmax(rel_res))
        if rel_res[i] > max_rel:
            max_rel = float(rel_res[i])
            worst = {**ctx.as_dict(), "x": float(x[i]), "y": float(y[i])}
        max_abs = max(max_abs, float(abs_res.max()))
    return IdentityReport(id, params, n, max_abs, max_rel, tolerance, max_rel <= tolerance, worst)


def param_sets(id: IdentityId, max_m: int, max_n: int) -> list[dict]:
    if not id.params:
        return [{}]
    name = id.params[0]
    top = max_m if name == "m" else max_n
    return [{name: v} for v in range(1, top + 1)]


def run_all(
    grid: SampleGrid | None = None,
    max_m: int = 8,
    max_n: int = 16,
    tolerance: float = DEFAULT_TOLERANCE,
) -> list[IdentityReport]:
    """Every catalog identity over its parameter range, in catalog order.

    A failing identity yields a failed report; the sweep never aborts.
    """
    if max_m < 1 or max_n < 1:
        raise ValueError("max_m and max_n must be >= 1")
    grid = grid if grid is not None else make_grid()
    reports = []
    for ident in IdentityId:
        for params in param_sets(ident, max_m, max_n):
            try:
                reports.append(run_identity(ident, params, grid, tolerance))
            except Exception as exc:  # reported, not raised
                reports.append(
                    IdentityReport(ident, params, 0, math.nan, math.nan, tolerance, False, {}, f"{type(exc).__name__}: {exc}")
                )
    return reports


# -- lambda -> 0 convergence -----------------------------------------------------

SWEEP_LAMBDAS = tuple(2.0 ** -k for k in range(3, 16))


class SweepResult(NamedTuple):
    lambdas: tuple[float, ...]
    errors: tuple[float, ...]
    fitted_slope: float | None


def loglog_slope(hs: Sequence[float], errs: Sequence[float]) -> float | None:
    """Least-squares slope of log(err) against log(h); None if any err is 0."""
    errs = np.asarray(errs, dtype=float)
    if errs.size < 2 or np.any(errs <= 0):
        return None
    return float(np.polyfit(np.log(np.asarray(hs, dtype=float)), np.log(errs), 1)[0])


def classical_limit_sweep(x: float, a: float, lambdas: Sequence[float] = SWEEP_LAMBDAS) -> SweepResult:
    """``|cos_l - cos(ax)| + |sin_l - sin(ax)|`` for each lambda, plus the log-log slope."""
    errs = []
    for lam in lambdas:
        if not lam > 0:
            raise DomainError(f"sweep lambdas must be positive, got {lam!r}")
        ctx = DegenContext(lam, a)
        errs.append(
            float(abs(cos_l(ctx, x) - math.cos(a * x)) + abs(sin_l(ctx, x) - math.sin(a * x)))
        )
    return SweepResult(tuple(lambdas), tuple(errs), loglog_slope(lambdas, errs))


def derivative_errors(ctx: DegenContext, xs, hs) -> tuple[list[float], float | None]:
    """Max central-difference error of cos_l and sin_l over ``xs`` for each step."""
    xs = np.asarray(xs, dtype=float)
    exact_c, exact_s = d_cos_l(ctx, xs), d_sin_l(ctx, xs)
    errs = []
    for h in hs:
        ec = np.abs(central_difference(lambda v: cos_l(ctx, v), xs, h) - exact_c)
        es = np.abs(central_difference(lambda v: sin_l(ctx, v), xs, h) - exact_s)
        errs.append(float(max(ec.max(), es.max())))
    return errs, loglog_slope(hs, errs)
