import math
from unittest import TestCase
import numpy as np
from tests.base import load_body
from convgeom.bodies import Ellipsoid, Polygon
from convgeom.volume import TranslateProblem
from convgeom.calculus import grad_F, normal_flux, finite_difference_gradient
from convgeom.errors import NotSmoothError, InvalidParameterError


class TestGradient(TestCase):
    def test_disk_lens(self):
        problem = TranslateProblem(Ellipsoid.ball(2), 1.0, [1, 0])
        rv = grad_F(problem)
        np.testing.assert_allclose(rv.value, [-math.sqrt(3), 0], atol=1e-7)
        np.testing.assert_allclose(rv.reverse_form, rv.value, atol=1e-7)
        self.assertFalse(rv.outside_support)

    def test_lens_magnitude(self):
        disk = Ellipsoid.ball(2)
        for d in (0.3, 1.2, 1.8):
            x = d * np.array([0.6, 0.8])
            rv = grad_F(TranslateProblem(disk, 1.0, x))
            np.testing.assert_allclose(rv.value, -math.sqrt(4 - d * d) * np.array([0.6, 0.8]), atol=1e-7)

    def test_affine_image(self):
        # the gradient of F for M·K at M·x is |det M| M^{-T} of the one for K at x
        problem = TranslateProblem(load_body("ellipse21.json"), 1.0, [1, 0])
        rv = grad_F(problem)
        np.testing.assert_allclose(rv.value, [-math.sqrt(3.75), 0], atol=1e-6)

    def test_linear_image(self):
        problem = TranslateProblem(load_body("linear_ellipse.json"), 1.0, [1.3, -0.4])
        expected = grad_F(TranslateProblem(load_body("ellipse21.json"), 1.0, [1.3, -0.4])).value
        np.testing.assert_allclose(grad_F(problem).value, expected, atol=1e-6)

    def test_normal_flux(self):
        problem = TranslateProblem(Ellipsoid.ball(2), 1.0, [0, 1])
        np.testing.assert_allclose(normal_flux(problem), [0, math.sqrt(3)], atol=1e-7)

    def test_finite_differences(self):
        problem = TranslateProblem(load_body("pball4.json"), 1.0, [0.7, 0.4])
        expected = finite_difference_gradient(problem, tol=1e-7)
        np.testing.assert_allclose(grad_F(problem).value, expected, atol=1e-4)

    def test_different_scale(self):
        problem = TranslateProblem(Ellipsoid.ball(2), 0.5, [1, 0])
        expected = finite_difference_gradient(problem, tol=1e-7)
        np.testing.assert_allclose(grad_F(problem).value, expected, atol=1e-4)

    def test_origin_and_outside(self):
        disk = Ellipsoid.ball(2)
        rv = grad_F(TranslateProblem(disk, 1.0, [0, 0]))
        np.testing.assert_array_equal(rv.value, [0, 0])
        rv = grad_F(TranslateProblem(disk, 1.0, [2.5, 0]))
        np.testing.assert_array_equal(rv.value, [0, 0])
        self.assertTrue(rv.outside_support)

    def test_nested(self):
        problem = TranslateProblem(Ellipsoid.ball(2), 1.0, [0.2, 0], other=Ellipsoid.ball(2, 0.5))
        np.testing.assert_allclose(grad_F(problem).value, [0, 0], atol=1e-9)

    def test_spatial_balls(self):
        problem = TranslateProblem(Ellipsoid.ball(3), 1.0, [1, 0, 0])
        rv = grad_F(problem)
        # dF/dd = -π(4 - d²)/4 for unit balls at distance d
        np.testing.assert_allclose(rv.value, [-3 * math.pi / 4, 0, 0], atol=0.05)
        np.testing.assert_allclose(rv.reverse_form, rv.value, atol=0.05)

    def test_not_smooth(self):
        problem = TranslateProblem(Polygon.square(), 1.0, [1, 0])
        self.assertRaises(NotSmoothError, grad_F, problem)

    def test_dimension(self):
        problem = TranslateProblem(Ellipsoid.ball(4), 1.0, [1, 0, 0, 0])
        self.assertRaises(InvalidParameterError, grad_F, problem)


def random_translates(rng, count, low=0.2, high=1.6):
    # smooth bodies with x inside the support of F, away from the origin
    bodies = [Ellipsoid.ball(2), load_body("ellipse21.json"), load_body("linear_ellipse.json")]
    for k in range(count):
        body = bodies[k % len(bodies)]
        u = rng.standard_normal(2)
        u /= np.linalg.norm(u)
        r = rng.uniform(low, high) / float(body.gauge(u[None, :])[0])
        yield TranslateProblem(body, 1.0, r * u)


class TestRandomGradients(TestCase):
    def test_matches_finite_differences(self):
        rng = np.random.default_rng(11)
        for problem in random_translates(rng, 50):
            expected = finite_difference_gradient(problem, step=1e-2, tol=1e-6)
            np.testing.assert_allclose(grad_F(problem).value, expected, rtol=1e-4, atol=2e-5)
