"""Bessel evaluation against the integral-definition quadrature oracle."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from stickygap import (bessel_j, bessel_j_prime, bessel_j_quadrature,
                       bessel_j_second)

J0_FIRST_ZERO = 2.404825557695773
J1_FIRST_EXTREMUM = 1.841183781340659


def _simpson_weights(n_panels):
    w = np.ones(n_panels + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return w


def quad_j_vec(m, xs, n_panels=1024):
    """Composite-Simpson J_m on an array of arguments (test-side oracle)."""
    t = np.linspace(0.0, np.pi, n_panels + 1)
    w = _simpson_weights(n_panels)
    f = np.cos(m * t[None, :] - np.outer(xs, np.sin(t)))
    return (np.pi / n_panels / 3.0) * (f @ w) / np.pi


def quad_j_prime(m, x, n_panels=1024):
    """Derivative oracle from differentiating the integral definition:
    J_m'(x) = (1/pi) * int_0^pi sin(mt - x sin t) sin t dt."""
    t = np.linspace(0.0, np.pi, n_panels + 1)
    w = _simpson_weights(n_panels)
    f = np.sin(m * t - x * np.sin(t)) * np.sin(t)
    return float((np.pi / n_panels / 3.0) * np.dot(w, f) / np.pi)


class TestBesselJ:
    def test_at_zero(self):
        assert bessel_j(0, 0.0) == 1.0
        assert bessel_j(1, 0.0) == 0.0
        assert bessel_j(7, 0.0) == 0.0

    def test_first_zero_of_j0(self):
        assert abs(bessel_j(0, J0_FIRST_ZERO)) < 1e-10
        # the oracle brackets the zero: sign change across +-1e-6
        lo = float(quad_j_vec(0, np.array([J0_FIRST_ZERO - 1e-6]))[0])
        hi = float(quad_j_vec(0, np.array([J0_FIRST_ZERO + 1e-6]))[0])
        assert lo * hi < 0.0

    def test_matches_oracle_small_and_large(self):
        for m, x in [(0, 1.0), (3, 5.0), (2, 9.9), (5, 10.1), (10, 30.0), (0, 25.3)]:
            assert abs(bessel_j(m, x) - bessel_j_quadrature(m, x, 1024)) < 1e-10

    def test_series_recurrence_seam(self):
        # the evaluation strategy switches near x = 10; both sides must agree
        xs = np.linspace(9.5, 10.5, 11)
        for m in range(11):
            np.testing.assert_allclose(bessel_j(m, xs), quad_j_vec(m, xs),
                                       rtol=0.0, atol=1e-12)

    def test_vector_matches_scalar(self):
        xs = np.linspace(0.0, 40.0, 97)
        for m in (0, 1, 4, 9):
            vec = bessel_j(m, xs)
            scal = np.array([bessel_j(m, float(x)) for x in xs])
            np.testing.assert_allclose(vec, scal, rtol=0.0, atol=1e-13)

    def test_shape_preserved(self):
        xs = np.linspace(1.0, 3.0, 6).reshape(2, 3)
        out = bessel_j(2, xs)
        assert out.shape == (2, 3)
        assert isinstance(bessel_j(2, 1.5), float)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            bessel_j(0, -1.0)
        with pytest.raises(ValueError):
            bessel_j(0, math.nan)
        with pytest.raises(ValueError):
            bessel_j(0, math.inf)
        with pytest.raises(ValueError):
            bessel_j(0, 1.0001e4)
        with pytest.raises(ValueError):
            bessel_j(-1, 1.0)
        with pytest.raises(ValueError):
            bessel_j(201, 1.0)
        with pytest.raises(TypeError):
            bessel_j(1.5, 1.0)
        with pytest.raises(ValueError):
            bessel_j(0, np.array([1.0, -2.0]))

    @given(st.integers(min_value=0, max_value=50),
           st.floats(min_value=0.0, max_value=100.0,
                     allow_nan=False, allow_infinity=False))
    def test_bounded_by_one(self, m, x):
        v = bessel_j(m, x)
        assert math.isfinite(v)
        assert abs(v) <= 1.0 + 1e-12


class TestBesselJPrime:
    def test_at_zero(self):
        assert bessel_j_prime(0, 0.0) == 0.0
        assert bessel_j_prime(1, 0.0) == 0.5

    def test_first_extremum_of_j1(self):
        assert abs(bessel_j_prime(1, J1_FIRST_EXTREMUM)) < 1e-9
        # oracle derivative changes sign across the extremum
        lo = quad_j_prime(1, J1_FIRST_EXTREMUM - 1e-6)
        hi = quad_j_prime(1, J1_FIRST_EXTREMUM + 1e-6)
        assert lo * hi < 0.0

    def test_against_derivative_oracle(self):
        for m, x in [(0, 2.0), (1, 5.5), (3, 12.0), (8, 27.0)]:
            assert abs(bessel_j_prime(m, x) - quad_j_prime(m, x)) < 1e-10

    def test_highest_order_allowed(self):
        # order 200 needs J_201 internally; must not hit the order cap
        assert math.isfinite(bessel_j_prime(200, 50.0))

    def test_vector_path(self):
        xs = np.linspace(0.0, 30.0, 61)
        vec = bessel_j_prime(2, xs)
        scal = np.array([bessel_j_prime(2, float(x)) for x in xs])
        np.testing.assert_allclose(vec, scal, rtol=0.0, atol=1e-13)


class TestBesselJSecond:
    def test_limit_at_origin(self):
        assert abs(bessel_j_second(0, 1e-6) - (-0.5)) < 1e-5

    def test_against_finite_difference_oracle(self):
        h = 1e-4
        xs = np.array([1.0 - h, 1.0, 1.0 + h])
        vals = quad_j_vec(2, xs)
        fd = float((vals[0] - 2.0 * vals[1] + vals[2]) / h**2)
        assert abs(bessel_j_second(2, 1.0) - fd) < 1e-6

    def test_identity_at_j1_extremum(self):
        x = J1_FIRST_EXTREMUM
        expected = (1.0 - x * x) * bessel_j(1, x) / (x * x)
        assert abs(bessel_j_second(1, x) - expected) < 1e-12

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            bessel_j_second(0, 0.0)

    def test_vector_path(self):
        xs = np.linspace(0.5, 20.0, 40)
        vec = bessel_j_second(3, xs)
        scal = np.array([bessel_j_second(3, float(x)) for x in xs])
        np.testing.assert_allclose(vec, scal, rtol=0.0, atol=1e-12)


class TestQuadratureOracle:
    def test_trivial_integrands(self):
        assert abs(bessel_j_quadrature(0, 0.0, 64) - 1.0) < 1e-14
        assert abs(bessel_j_quadrature(1, 0.0, 256)) < 1e-14

    def test_cross_implementation(self):
        assert abs(bessel_j_quadrature(3, 5.0, 512) - bessel_j(3, 5.0)) < 1e-10

    def test_panel_validation(self):
        with pytest.raises(ValueError):
            bessel_j_quadrature(0, 1.0, 63)
        with pytest.raises(ValueError):
            bessel_j_quadrature(0, 1.0, 32)
        with pytest.raises(TypeError):
            bessel_j_quadrature(0, 1.0, 64.0)


class TestGridInvariants:
    def setup_method(self):
        self.xs = np.arange(0.0, 30.0 + 1e-9, 0.1)

    def test_oracle_agreement(self):
        for m in range(11):
            got = bessel_j(m, self.xs)
            want = quad_j_vec(m, self.xs)
            assert np.max(np.abs(got - want)) <= 1e-10

    def test_recurrence_residual(self):
        xs = self.xs[self.xs >= 0.5]
        for m in range(1, 11):
            res = bessel_j(m - 1, xs) + bessel_j(m + 1, xs) \
                - (2.0 * m / xs) * bessel_j(m, xs)
            assert np.max(np.abs(res)) <= 1e-9

    def test_ode_residual(self):
        xs = self.xs[self.xs > 0.0]
        for m in range(11):
            res = xs**2 * bessel_j_second(m, xs) + xs * bessel_j_prime(m, xs) \
                + (xs**2 - m * m) * bessel_j(m, xs)
            assert np.max(np.abs(res)) <= 1e-8
