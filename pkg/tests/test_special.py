"""Special functions against independent oracles (scipy, mpmath, closed forms)."""

import cmath
import math

import mpmath as mp
import numpy as np
import pytest
import scipy.special as ss

from octoplane.errors import NumericsError
from octoplane.special import (
    RHO,
    KTypeIndex,
    SpectralParam,
    gauss_2f1,
    hc_c_function,
    log_gamma,
    pochhammer,
    spherical_fn,
    spherical_fn_scaled,
)

mp.mp.dps = 40


class TestLogGamma:
    def test_classical_values(self):
        assert abs(log_gamma(1.0)) < 1e-14
        assert abs(log_gamma(2.0)) < 1e-14
        assert log_gamma(0.5).real == pytest.approx(math.log(math.sqrt(math.pi)), abs=1e-14)

    def test_recurrence(self):
        rng = np.random.default_rng(0)
        for _ in range(300):
            z = complex(rng.uniform(-5, 8), rng.uniform(-8, 8))
            if abs(z.imag) < 1e-2 and abs(z.real - round(z.real)) < 1e-2:
                continue
            g1, g0 = cmath.exp(log_gamma(z + 1)), cmath.exp(log_gamma(z))
            assert abs(g1 - z * g0) / abs(g1) < 1e-12

    def test_imaginary_axis_reflection_oracle(self):
        # |Gamma(i t)|^2 = pi / (t sinh(pi t))
        for t in (0.25, 0.5, 1.0, 2.0, 4.0):
            lhs = abs(cmath.exp(log_gamma(1j * t))) ** 2
            rhs = math.pi / (t * math.sinh(math.pi * t))
            assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_against_scipy(self):
        rng = np.random.default_rng(1)
        for _ in range(200):
            z = complex(rng.uniform(0.5, 20), rng.uniform(-15, 15))
            mine = cmath.exp(log_gamma(z))
            ref = cmath.exp(complex(ss.loggamma(z)))
            assert abs(mine - ref) / abs(ref) < 1e-12

    def test_pole_rejected(self):
        for z in (0.0, -1.0, -7.0):
            with pytest.raises(ValueError, match="pole"):
                log_gamma(z)


class TestPochhammer:
    def test_basics(self):
        assert pochhammer(3.7 + 2j, 0) == 1.0
        assert pochhammer(8.0, 3) == pytest.approx(720.0, rel=1e-15)

    def test_gamma_ratio_oracle(self):
        rng = np.random.default_rng(2)
        for _ in range(200):
            a = complex(rng.uniform(0.3, 8), rng.uniform(-5, 5))
            k = int(rng.integers(0, 21))
            ref = complex(mp.gamma(mp.mpc(a) + k) / mp.gamma(mp.mpc(a)))
            assert abs(pochhammer(a, k) - ref) / max(abs(ref), 1e-300) < 1e-12

    def test_negative_k_rejected(self):
        with pytest.raises(ValueError):
            pochhammer(1.0, -1)


class TestGauss2F1:
    def test_at_zero(self):
        assert gauss_2f1(1.5 + 2j, 0.3, 4.0, 0.0) == 1.0 + 0j

    def test_binomial_identity(self):
        # 2F1(a, b; b; z) = (1-z)^{-a}
        assert gauss_2f1(11.0, 8.0, 8.0, 0.5) == pytest.approx(2048.0, rel=1e-13)
        v = gauss_2f1(2.5 + 1j, 9.0, 9.0, 0.9)
        ref = cmath.exp(-(2.5 + 1j) * math.log(0.1))
        assert abs(v - ref) / abs(ref) < 1e-13

    def test_real_parameters_against_scipy(self):
        rng = np.random.default_rng(3)
        for _ in range(150):
            a = rng.uniform(0.1, 5)
            b = rng.uniform(0.1, 5)
            c = rng.uniform(5.2, 9)  # keep c - a - b off integers
            z = rng.uniform(0, 0.97)
            if abs((c - a - b) - round(c - a - b)) < 1e-3:
                continue
            mine = gauss_2f1(a, b, c, z)
            ref = ss.hyp2f1(a, b, c, z)
            assert abs(mine - ref) / abs(ref) < 1e-11

    def test_complex_parameters_against_mpmath(self):
        for lam in (0.3, 1.0, 3.0):
            s = (1j * lam + RHO) / 2
            for (l, m) in ((0, 0), (4, 2), (9, 3), (10, 10)):
                a, b, c = s + (l + m) / 2, s + (l - m) / 2 - 3, l + 8.0
                for z in (0.2, 0.74, 0.76, 0.95, 0.999):
                    mine = gauss_2f1(a, b, c, z)
                    ref = complex(mp.hyp2f1(mp.mpc(a), mp.mpc(b), mp.mpc(c), mp.mpf(z)))
                    assert abs(mine - ref) / abs(ref) < 1e-10, (lam, l, m, z)

    def test_seam_consistency(self):
        worst = 0.0
        for lam in (0.5, 1.0, 2.0):
            s = (1j * lam + RHO) / 2
            for l in range(0, 11):
                for m in range(l % 2, l + 1, 2):
                    a, b, c = s + (l + m) / 2, s + (l - m) / 2 - 3, l + 8.0
                    for z in (0.75 - 1e-6, 0.75 + 1e-6):
                        via_series = gauss_2f1(a, b, c, z, z_switch=0.9)
                        via_conn = gauss_2f1(a, b, c, z, z_switch=0.5)
                        worst = max(worst, abs(via_series - via_conn) / abs(via_series))
        assert worst < 1e-9

    def test_ode_residual(self):
        h = 1e-4
        for lam in (0.5, 2.0):
            s = (1j * lam + RHO) / 2
            a, b, c = s + 1, s - 2, 10.0
            for z in (0.25, 0.6, 0.85):
                w0 = gauss_2f1(a, b, c, z)
                wp = gauss_2f1(a, b, c, z + h)
                wm = gauss_2f1(a, b, c, z - h)
                res = (
                    z * (1 - z) * (wp - 2 * w0 + wm) / h**2
                    + (c - (a + b + 1) * z) * (wp - wm) / (2 * h)
                    - a * b * w0
                )
                assert abs(res) / max(abs(a * b * w0), 1.0) < 1e-5

    def test_degenerate_and_pole_errors(self):
        with pytest.raises(ValueError, match="pole"):
            gauss_2f1(1.0, 2.0, -3.0, 0.5)
        with pytest.raises(ValueError, match="degenerate"):
            gauss_2f1(2.0, 3.0, 6.0, 0.9)  # c - a - b = 1, integer, a != c != b
        with pytest.raises(ValueError):
            gauss_2f1(1.0, 2.0, 4.0, 1.5)

    def test_series_nonconvergence_diagnostics(self):
        with pytest.raises(NumericsError, match="terms"):
            gauss_2f1(1.0 + 1j, 2.0, 4.5, 0.999999, z_switch=1.0 - 1e-12)


class TestCFunction:
    def test_gamma_cancellation_value(self):
        # at lam = -11i the exponent collapses and the quotient is
        # Gamma(8) Gamma(11) / (Gamma(8) Gamma(11)) = 1
        assert hc_c_function(-11j) == pytest.approx(1.0, rel=1e-12)

    def test_even_modulus(self):
        for lam in (0.5, 1.0, 2.0):
            assert abs(hc_c_function(lam)) == pytest.approx(
                abs(hc_c_function(-lam)), rel=1e-12
            )

    def test_simple_pole_at_origin(self):
        v1 = abs(hc_c_function(1e-3)) * 1e-3
        v2 = abs(hc_c_function(1e-5)) * 1e-5
        assert v2 > 0
        assert v1 == pytest.approx(v2, rel=1e-2)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            hc_c_function(0.0)

    def test_against_mpmath(self):
        for lam in (0.25, 1.0, 4.0):
            s = mp.mpc(11, lam) / 2
            ref = complex(mp.gamma(8) * mp.gamma(mp.mpc(0, lam))
                          / (mp.gamma(s - 3) * mp.gamma(s)))
            assert abs(hc_c_function(lam) - ref) / abs(ref) < 1e-12


def _phi_oracle(lam, l, m, r):
    s = mp.mpc(11, lam) / 2 if not isinstance(lam, complex) else (mp.mpc(0, 1) * lam + 11) / 2
    a = s + mp.mpf(l + m) / 2
    b = s + mp.mpf(l - m) / 2 - 3
    c = mp.mpf(l + 8)
    pref = (mp.rf(s, (m + l) // 2) * mp.rf(s - 3, (l - m) // 2) / mp.rf(mp.mpf(8), l))
    val = pref * mp.mpf(r) ** l * (1 - mp.mpf(r) ** 2) ** s * mp.hyp2f1(a, b, c, mp.mpf(r) ** 2)
    return complex(val)


class TestSphericalFn:
    def test_index_validation(self):
        KTypeIndex(4, 2)
        with pytest.raises(ValueError):
            KTypeIndex(2, 3)
        with pytest.raises(ValueError):
            KTypeIndex(3, 2)  # l + m odd
        with pytest.raises(ValueError):
            spherical_fn(1.0, 2, 1, 0.5)

    def test_at_origin(self):
        for lam in (0.5, 1.0, 7.0):
            assert spherical_fn(lam, 0, 0, 0.0) == pytest.approx(1.0, abs=1e-14)

    def test_harmonic_case_is_one(self):
        for r in (0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999):
            assert abs(spherical_fn(-1j * RHO, 0, 0, r) - 1.0) < 1e-10

    def test_against_mpmath_oracle(self):
        for lam in (0.5, 2.0):
            for (l, m) in ((0, 0), (2, 0), (2, 2), (6, 2)):
                for r in (0.3, 0.8, 0.99):
                    mine = spherical_fn(lam, l, m, r)
                    ref = _phi_oracle(lam, l, m, r)
                    assert abs(mine - ref) / max(abs(ref), 1e-300) < 1e-9

    def test_scaled_version_consistent(self):
        for lam in (0.5, 1.0):
            for r in (0.2, 0.9, 0.999):
                direct = spherical_fn(lam, 2, 0, r) * (1 - r * r) ** (-RHO / 2)
                scaled = spherical_fn_scaled(lam, 2, 0, one_minus_r2=1 - r * r)
                assert abs(direct - scaled) / abs(scaled) < 1e-9

    def test_scaled_bounded_to_the_boundary(self):
        # the scaled profile stays in range where Phi itself underflows
        for sgeo in (5.0, 20.0, 300.0):
            omr2 = 1.0 / math.cosh(sgeo) ** 2
            v = spherical_fn_scaled(1.0, 0, 0, one_minus_r2=omr2)
            assert np.isfinite(abs(v))
            assert abs(v) < 2.5 * abs(hc_c_function(1.0))

    def test_uniform_bound_grid_saturation(self):
        def grid_max(lam, l_cap):
            best = 0.0
            for l in range(0, l_cap + 1, 2):
                for m in range(0, l + 1, 2):
                    for r in (0.5, 0.9, 0.99, 0.999):
                        best = max(best, abs(spherical_fn_scaled(
                            lam, l, m, one_minus_r2=1 - r * r)))
            return best

        for lam in (0.5, 1.0, 2.0):
            m10, m20 = grid_max(lam, 10), grid_max(lam, 20)
            assert (m20 - m10) / m10 < 0.10

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            spherical_fn(1.0, 0, 0, 1.0)
        with pytest.raises(ValueError):
            spherical_fn(1.0, 0, 0, -0.1)

    def test_spectral_param_validation(self):
        sp = SpectralParam(2.0)
        assert sp.s == pytest.approx((2j + 11) / 2)
        with pytest.raises(ValueError):
            SpectralParam(0.0)
        with pytest.raises(ValueError):
            SpectralParam(float("nan"))
