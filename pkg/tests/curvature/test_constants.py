import math
from unittest import TestCase
import numpy as np
from convgeom.curvature import cn_constant
from convgeom.limits.extrapolate import extrapolate, fit_exponent, is_divergent
from convgeom.errors import InvalidParameterError


class TestConstants(TestCase):
    def test_values(self):
        self.assertAlmostEqual(cn_constant(1), 1.0)
        self.assertAlmostEqual(cn_constant(2) ** 3, 32 / 9)
        self.assertAlmostEqual(cn_constant(3), math.sqrt(math.pi))

    def test_invalid(self):
        self.assertRaises(InvalidParameterError, cn_constant, 0)
        self.assertRaises(InvalidParameterError, cn_constant, 2.5)


class TestExtrapolate(TestCase):
    def test_linear_tail(self):
        h = 0.2 * 2.0 ** -np.arange(7)
        fit = extrapolate(h, 3 + 2 * h)
        self.assertAlmostEqual(fit.kappa, 3.0, places=10)
        self.assertAlmostEqual(fit.exponent, 1.0, places=10)
        self.assertLess(fit.residual, 1e-12)

    def test_fitted_exponent(self):
        h = 0.2 * 2.0 ** -np.arange(7)
        values = 0.5 - 4 * h ** 1.5
        self.assertAlmostEqual(fit_exponent(h, values), 1.5, places=8)
        self.assertAlmostEqual(extrapolate(h, values).kappa, 0.5, places=8)

    def test_noisy_differences(self):
        h = np.array([0.4, 0.2, 0.1, 0.05])
        self.assertEqual(fit_exponent(h, np.array([1.0, 1.1, 1.05, 1.07])), 1.0)

    def test_divergence(self):
        h = 0.2 * 2.0 ** -np.arange(7)
        values = np.sqrt(h)
        self.assertTrue(is_divergent(values, extrapolate(h, values)))
        values = 1 + h
        self.assertFalse(is_divergent(values, extrapolate(h, values)))

    def test_negative_limit_is_divergent(self):
        h = 0.2 * 2.0 ** -np.arange(4)
        values = -0.05 + 0.5 * h ** 0.25
        fit = extrapolate(h, values)
        self.assertAlmostEqual(fit.kappa, -0.05, places=8)
        # the raw estimates only fall by a factor of two
        self.assertLess(values[0] / values[-1], 4)
        self.assertTrue(is_divergent(values, fit))
