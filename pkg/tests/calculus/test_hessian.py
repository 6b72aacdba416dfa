import math
from unittest import TestCase
import numpy as np
from tests.base import load_body
from tests.calculus.test_gradient import random_translates
from convgeom.bodies import Ellipsoid, Polygon
from convgeom.volume import TranslateProblem
from convgeom.calculus import (
    hessian_F,
    locate_intersection_curve,
    finite_difference_hessian,
)
from convgeom.errors import (
    EmptyIntersectionError,
    InvalidParameterError,
    NotSmoothError,
)


class TestIntersectionCurve(TestCase):
    def test_planar_crossings(self):
        curve = locate_intersection_curve(TranslateProblem(Ellipsoid.ball(2), 1.0, [1, 0]))
        self.assertEqual(len(curve), 2)
        points = curve.points[np.argsort(curve.points[:, 1])]
        np.testing.assert_allclose(points, [[0.5, -math.sqrt(3) / 2], [0.5, math.sqrt(3) / 2]], atol=1e-9)
        np.testing.assert_allclose(curve.cosines, [0.5, 0.5], atol=1e-9)
        np.testing.assert_array_equal(curve.weights, [1, 1])

    def test_spatial_circle(self):
        curve = locate_intersection_curve(TranslateProblem(Ellipsoid.ball(3), 1.0, [1, 0, 0]))
        np.testing.assert_allclose(curve.points[:, 0], 0.5, atol=1e-6)
        np.testing.assert_allclose(np.linalg.norm(curve.points, axis=1), 1, atol=1e-6)
        self.assertAlmostEqual(float(curve.weights.sum()), math.pi * math.sqrt(3), delta=1e-3)

    def test_empty(self):
        problem = TranslateProblem(Ellipsoid.ball(2), 1.0, [2.5, 0])
        self.assertRaises(EmptyIntersectionError, locate_intersection_curve, problem)


class TestHessian(TestCase):
    def test_disk_lens(self):
        rv = hessian_F(TranslateProblem(Ellipsoid.ball(2), 1.0, [1, 0]))
        np.testing.assert_allclose(rv, [[1 / math.sqrt(3), 0], [0, -math.sqrt(3)]], atol=1e-8)

    def test_symmetric(self):
        rv = hessian_F(TranslateProblem(load_body("ellipse21.json"), 1.0, [0.9, 0.6]))
        np.testing.assert_allclose(rv, rv.T, atol=1e-12)

    def test_finite_differences(self):
        problem = TranslateProblem(load_body("pball4.json"), 1.0, [0.5, 0.9])
        np.testing.assert_allclose(hessian_F(problem), finite_difference_hessian(problem), atol=1e-3)

    def test_spatial_balls(self):
        rv = hessian_F(TranslateProblem(Ellipsoid.ball(3), 1.0, [1, 0, 0]))
        expected = np.diag([math.pi / 2, -3 * math.pi / 4, -3 * math.pi / 4])
        np.testing.assert_allclose(rv, expected, atol=0.02)

    def test_nested(self):
        problem = TranslateProblem(Ellipsoid.ball(2), 1.0, [0.2, 0], other=Ellipsoid.ball(2, 0.5))
        np.testing.assert_array_equal(hessian_F(problem), np.zeros((2, 2)))

    def test_errors(self):
        disk = Ellipsoid.ball(2)
        self.assertRaises(InvalidParameterError, hessian_F, TranslateProblem(disk, 1.0, [0, 0]))
        self.assertRaises(EmptyIntersectionError, hessian_F, TranslateProblem(disk, 1.0, [3, 0]))
        self.assertRaises(NotSmoothError, hessian_F, TranslateProblem(Polygon.square(), 1.0, [1, 0]))


class TestRandomHessians(TestCase):
    def test_matches_finite_differences(self):
        rng = np.random.default_rng(5)
        for problem in random_translates(rng, 20, 0.3, 1.5):
            expected = finite_difference_hessian(problem, step=1e-3)
            np.testing.assert_allclose(hessian_F(problem), expected, rtol=1e-3, atol=1e-3)
