from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degentrig import DegenContext, cos_l, sin_l
from degentrig.catalog import EXACT_CAPABLE, IdentityId
from degentrig.chebpoly import cheb_coeffs
from degentrig.errors import NonInvertibleError, NotExactCapableError, OrderMismatchError, ParamError
from degentrig import series as ser
from degentrig.series import (
    FormalSeries,
    GaussianRational as G,
    series_add,
    series_degen_exp,
    series_div,
    series_mul,
    series_poly_apply,
    series_scale,
    series_sin_cos,
    series_sub,
    verify_exact,
)

from .oracles import series_coeffs_exact

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=12)
nonzero_rationals = rationals.filter(lambda v: v != 0)


class TestGaussianRational:
    def test_field_ops(self):
        a, b = G(1, 2), G(F(1, 3), -1)
        assert a + b == G(F(4, 3), 1)
        assert a - b == G(F(2, 3), 3)
        assert a * b == G(F(1, 3) + 2, F(-1) + F(2, 3))
        assert (a / b) * b == a
        assert G(0, 1) * G(0, 1) == -1
        assert not G(0, 0)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            G(1, 1) / G(0, 0)

    def test_complex_conversion(self):
        assert complex(G(F(1, 2), F(-1, 4))) == 0.5 - 0.25j


class TestDegenExp:
    def test_zero_exponent(self):
        f = series_degen_exp(0, F(3, 7), 8)
        assert f.coeffs == FormalSeries.constant(1, 8).coeffs

    def test_linear_case(self):
        f = series_degen_exp(1, 1, 8)
        assert f.coeffs == tuple(G(v) for v in [1, 1, 0, 0, 0, 0, 0, 0, 0])

    def test_imaginary_unit_exponent(self):
        f = series_degen_exp(G(0, 1), 1, 3)
        expected = series_coeffs_exact((F(0), F(1)), F(1), 3)
        assert [(c.re, c.im) for c in f.coeffs] == expected
        # i(i-1)(i-2)/6 = (3 + i)/6
        assert f.coeffs == (G(1), G(0, 1), G(F(-1, 2), F(-1, 2)), G(F(1, 2), F(1, 6)))

    @settings(max_examples=40)
    @given(rationals, rationals, nonzero_rationals)
    def test_against_oracle(self, re, im, lam):
        f = series_degen_exp(G(re, im), lam, 10)
        assert [(c.re, c.im) for c in f.coeffs] == series_coeffs_exact((re, im), lam, 10)

    @settings(max_examples=40)
    @given(rationals, rationals, rationals, rationals, nonzero_rationals)
    def test_group_law(self, r1, i1, r2, i2, lam):
        a = series_degen_exp(G(r1, i1), lam, 12)
        b = series_degen_exp(G(r2, i2), lam, 12)
        assert a * b == series_degen_exp(G(r1 + r2, i1 + i2), lam, 12)

    def test_conjugate_pair_multiplies_to_one(self):
        for lam in (F(1), F(-1, 2), F(2, 3)):
            p = series_mul(series_degen_exp(G(0, 1), lam, 16), series_degen_exp(G(0, -1), lam, 16))
            assert p == FormalSeries.constant(1, 16)

    def test_zero_lambda_rejected(self):
        with pytest.raises(ValueError):
            series_degen_exp(1, 0, 4)


class TestRing:
    def test_additive_identity(self):
        f = series_degen_exp(G(F(1, 2), 1), F(1, 3), 6)
        assert series_add(f, FormalSeries.constant(0, 6)) == f
        assert series_sub(f, f) == FormalSeries.constant(0, 6)

    def test_square_of_one_plus_a(self):
        f = FormalSeries([1, 1] + [0] * 7)
        assert series_mul(f, f).coeffs == tuple(G(v) for v in [1, 2, 1, 0, 0, 0, 0, 0, 0])

    def test_truncation(self):
        f = FormalSeries.variable(3)
        assert (f * f * f * f) == FormalSeries.constant(0, 3)

    def test_scale(self):
        f = FormalSeries([1, 2])
        assert series_scale(G(0, 1), f).coeffs == (G(0, 1), G(0, 2))

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatchError):
            FormalSeries([1, 2]) + FormalSeries([1, 2, 3])

    def test_complex_mul_matches_naive(self):
        f = series_degen_exp(G(F(1, 3), F(2, 5)), F(-1, 2), 6)
        g = series_degen_exp(G(F(-2), F(1, 7)), F(3, 4), 6)
        naive = [sum((f.coeffs[j] * g.coeffs[n - j] for j in range(n + 1)), G(0)) for n in range(7)]
        assert (f * g).coeffs == tuple(naive)

    def test_power(self):
        f = FormalSeries([1, 1, 0, 0, 0])
        assert (f**3).coeffs == tuple(G(v) for v in [1, 3, 3, 1, 0])


class TestDivision:
    def test_self_quotient(self):
        f = series_degen_exp(G(F(1, 2), F(1, 3)), F(1, 5), 10)
        assert series_div(f, f) == FormalSeries.constant(1, 10)

    def test_round_trip(self):
        f = series_degen_exp(G(2, 1), F(-1, 3), 10)
        g = series_degen_exp(G(F(1, 4), 0), F(1, 2), 10)
        assert (f / g) * g == f

    def test_tangent_leading_coefficient(self):
        s, c = series_sin_cos(1, 1, 10)
        t = series_div(s, c)
        assert t.coeffs[0] == 0
        assert t.coeffs[1] == 1

    def test_non_invertible(self):
        s, c = series_sin_cos(1, 1, 6)
        with pytest.raises(NonInvertibleError):
            series_div(c, s)


class TestSinCos:
    @pytest.mark.parametrize("x, lam", [(F(1), F(1)), (F(2, 3), F(-1, 2)), (F(-5, 4), F(3, 7))])
    def test_shape(self, x, lam):
        s, c = series_sin_cos(x, lam, 16)
        assert s.is_real() and c.is_real()
        assert (s.coeffs[0], c.coeffs[0]) == (0, 1)
        assert s.coeffs[1] == x and c.coeffs[1] == 0

    @pytest.mark.parametrize("x, lam, a0", [(F(1), F(1, 2), 0.05), (F(-2, 3), F(-1, 4), 0.2), (F(3, 2), F(2), 0.1)])
    def test_float_consistency(self, x, lam, a0):
        order = 32
        s, c = series_sin_cos(x, lam, order)
        ctx = DegenContext(float(lam), a0)
        bound = 1e-10 + abs(a0) ** (order + 1) * 2**order
        assert abs(s.evaluate(a0).real - sin_l(ctx, float(x))) <= bound
        assert abs(c.evaluate(a0).real - cos_l(ctx, float(x))) <= bound


class TestPolyApply:
    def test_t0_t1(self):
        f = series_sin_cos(F(1, 2), F(1, 3), 8).cos
        assert series_poly_apply(cheb_coeffs(0), f) == FormalSeries.constant(1, 8)
        assert series_poly_apply(cheb_coeffs(1), f) == f

    def test_t2_doubles_angle(self):
        c1 = series_sin_cos(1, 1, 24).cos
        c2 = series_sin_cos(2, 1, 24).cos
        assert series_poly_apply(cheb_coeffs(2), c1) == c2


class TestVerifyExact:
    def test_pythagorean(self):
        assert verify_exact(IdentityId.PYTHAGOREAN, 1, 0, 1, {}, 32) == (True, None)

    def test_addition_sin(self):
        assert verify_exact(IdentityId.ADDITION_SIN, F(2, 3), F(1, 5), F(-1, 2), {}, 24).passed

    @pytest.mark.parametrize("ident", EXACT_CAPABLE)
    def test_every_exact_identity(self, ident):
        params = {name: 3 for name in ident.params}
        assert verify_exact(ident, F(3, 4), F(-2, 5), F(-2, 3), params, 20).passed

    def test_order_zero(self):
        assert verify_exact(IdentityId.SIN_ODD_SUM, 1, 0, 1, {"m": 2}, 0).passed

    @pytest.mark.parametrize("ident", [i for i in IdentityId if not i.exact_capable])
    def test_float_only_rejected(self, ident):
        with pytest.raises(NotExactCapableError):
            verify_exact(ident, 1, 1, 1, {"m": 1}, 4)

    def test_missing_param(self):
        with pytest.raises(ParamError):
            verify_exact(IdentityId.MULTI_ANGLE_COS, 1, 1, 1, {}, 4)


class TestMutations:
    def test_flipped_sum_sign(self, monkeypatch):
        def bad(x, y, lam, params, order):
            s, c = series_sin_cos(x, lam, order)
            return [(s * s - c * c, FormalSeries.constant(1, order))]

        monkeypatch.setitem(ser.EXACT_CHECKS, IdentityId.PYTHAGOREAN, bad)
        assert verify_exact(IdentityId.PYTHAGOREAN, 1, 0, 1, {}, 32) == (False, 0)

    def test_flipped_exponent_sign(self, monkeypatch):
        def bad(x, y, lam, params, order):
            s = series_sin_cos(x, lam, order).sin
            ep = series_degen_exp(G(0, x), lam, order)
            c = series_scale(F(1, 2), ep + ep)  # e^{-xi} replaced by e^{+xi}
            return [(s * s + c * c, FormalSeries.constant(1, order))]

        monkeypatch.setitem(ser.EXACT_CHECKS, IdentityId.PYTHAGOREAN, bad)
        assert verify_exact(IdentityId.PYTHAGOREAN, 1, 0, 1, {}, 32) == (False, 1)

    def test_addition_sign(self, monkeypatch):
        def bad(x, y, lam, params, order):
            sx, cx = series_sin_cos(x, lam, order)
            sy, cy = series_sin_cos(y, lam, order)
            return [(series_sin_cos(x + y, lam, order).sin, sx * cy - cx * sy)]

        monkeypatch.setitem(ser.EXACT_CHECKS, IdentityId.ADDITION_SIN, bad)
        assert not verify_exact(IdentityId.ADDITION_SIN, F(2, 3), F(1, 5), F(-1, 2), {}, 24).passed


def test_certify_all_small_order():
    certs = ser.certify_all(6)
    assert len(certs) == 6 * (6 + 4 * 8 + 6)
    assert all(c.passed for c in certs)
