import math
from unittest import TestCase
import numpy as np
from tests.base import load_body
from convgeom.bodies import Ellipsoid, analytic_curvature, support, gauge
from convgeom.errors import InvalidBodyError, InvalidParameterError


class TestEllipsoid(TestCase):
    def test_gauge_and_support(self):
        ellipse = load_body("ellipse21.json")
        self.assertAlmostEqual(gauge(ellipse, [2, 0]), 1.0)
        self.assertAlmostEqual(gauge(ellipse, [0, 0.5]), 0.5)
        self.assertAlmostEqual(support(ellipse, [1, 0]), 2.0)
        self.assertAlmostEqual(support(ellipse, [0, 3]), 3.0)

    def test_batch_oracles(self):
        disk = Ellipsoid.ball(2)
        values = disk.gauge(np.array([[3, 4], [0, 0.5]]))
        np.testing.assert_allclose(values, [5, 0.5])

    def test_boundary_point(self):
        ellipse = load_body("ellipse21.json")
        for angle in np.linspace(0, 2 * np.pi, 13):
            u = np.array([np.cos(angle), np.sin(angle)])
            y = ellipse.boundary_point(u)
            self.assertAlmostEqual(float(ellipse.gauge(y)), 1.0, places=12)
            self.assertAlmostEqual(float(y @ u), float(ellipse.support(u)), places=12)

    def test_outer_normal(self):
        ellipse = load_body("ellipse21.json")
        normal = ellipse.outer_normal([2, 0])
        np.testing.assert_allclose(normal.vector, [1, 0])
        self.assertTrue(normal.unique)
        self.assertRaises(InvalidParameterError, ellipse.outer_normal, [1, 0])

    def test_curvature(self):
        ellipse = load_body("ellipse21.json")
        self.assertAlmostEqual(analytic_curvature(ellipse, [2, 0]), 2.0)
        self.assertAlmostEqual(analytic_curvature(ellipse, [0, 1]), 0.25)
        self.assertAlmostEqual(analytic_curvature(Ellipsoid.ball(2), [0, 1]), 1.0)
        self.assertAlmostEqual(analytic_curvature(load_body("sphere2.json"), [0, 2, 0]), 0.25)

    def test_chord(self):
        disk = Ellipsoid.ball(2)
        lower, upper = disk.chord([[0, 0], [0, 0.6], [0, 2]], [1, 0])
        np.testing.assert_allclose(lower[:2], [-1, -0.8])
        np.testing.assert_allclose(upper[:2], [1, 0.8])
        self.assertTrue(math.isnan(lower[2]))

    def test_exact_volume(self):
        self.assertAlmostEqual(load_body("ellipse21.json").exact_volume(), 2 * math.pi)
        self.assertAlmostEqual(load_body("ball3.json").exact_volume(), 4 * math.pi / 3)

    def test_invalid_matrix(self):
        self.assertRaises(InvalidBodyError, Ellipsoid, [[1, 0.5], [0, 1]])
        self.assertRaises(InvalidBodyError, Ellipsoid, [[1, 0], [0, -1]])
        self.assertRaises(InvalidBodyError, Ellipsoid.import_body, {"kind": "ellipsoid", "q": [[1, 0]]})
        self.assertRaises(InvalidBodyError, Ellipsoid.import_body, {"kind": "ellipsoid"})

    def test_as_dict(self):
        ellipse = load_body("ellipse21.json")
        self.assertEqual(ellipse.as_dict(), {"kind": "ellipsoid", "q": [[0.25, 0.0], [0.0, 1.0]]})
