"""Bessel J and log-gamma against scipy and closed-form oracles."""

import math

import numpy as np
import pytest
from scipy import special

from lagsob import bessel_j, log_gamma


class TestBesselJ:
    def test_values_at_zero(self):
        assert bessel_j(1.0, 0.0) == 0.0
        assert bessel_j(0.0, 0.0) == 1.0
        assert bessel_j(2.5, 0.0) == 0.0

    def test_frozen_reference_point(self):
        assert bessel_j(1.0, 1.0) == pytest.approx(0.4400505857449335, abs=1e-14)

    @pytest.mark.parametrize("alpha", [0.0, 0.5, 1.0, 2.0, 3.5])
    def test_against_scipy_on_certified_range(self, alpha):
        for z in np.linspace(0.0, 60.0, 121):
            assert bessel_j(alpha, float(z)) == pytest.approx(
                float(special.jv(alpha, z)), abs=1e-12
            )

    def test_derivative_identity(self):
        # J0' = -J1, J0' from central differences
        for z in (0.5, 1.0, 2.0, 5.0, 10.0):
            h = 1e-6
            fd = (bessel_j(0.0, z + h) - bessel_j(0.0, z - h)) / (2 * h)
            assert abs(fd - (-bessel_j(1.0, z))) <= 1e-8

    def test_small_argument_law(self):
        for z in np.linspace(1e-4, 0.1, 25):
            assert abs(bessel_j(1.0, float(z)) / z - 0.5) <= z**2 / 16.0 + 1e-12

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            bessel_j(1.0, -0.1)
        with pytest.raises(ValueError):
            bessel_j(1.0, 60.5)
        with pytest.raises(ValueError):
            bessel_j(-0.5, 1.0)


class TestLogGamma:
    def test_exact_integers(self):
        assert log_gamma(1.0) == 0.0
        assert log_gamma(2.0) == 0.0

    def test_product_form_oracle(self):
        # Gamma(4.5) = 3.5 * 2.5 * 1.5 * 0.5 * sqrt(pi)
        expected = math.log(3.5 * 2.5 * 1.5 * 0.5 * math.sqrt(math.pi))
        assert log_gamma(4.5) == pytest.approx(expected, rel=1e-14)

    @pytest.mark.parametrize("x", [0.5, 1.5, 7.0, 100.0])
    def test_recursion(self, x):
        assert log_gamma(x + 1.0) - log_gamma(x) == pytest.approx(math.log(x), rel=1e-12)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            log_gamma(0.0)
        with pytest.raises(ValueError):
            log_gamma(-3.0)
