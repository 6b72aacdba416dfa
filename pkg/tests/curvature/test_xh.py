from unittest import TestCase
import numpy as np
from tests.base import load_body
from convgeom.bodies import Ellipsoid, Polygon
from convgeom.curvature import locate_xh
from convgeom.volume import TranslateProblem, width_of_intersection
from convgeom.errors import InvalidParameterError, NotSmoothError


class TestLocateXh(TestCase):
    def test_disk(self):
        np.testing.assert_allclose(locate_xh(Ellipsoid.ball(2), [1, 0], 1.0, 0.5), [1.5, 0])
        np.testing.assert_allclose(locate_xh(Ellipsoid.ball(2), [1, 0], 0.5, 0.5), [1.0, 0])

    def test_realized_width(self):
        ellipse = load_body("ellipse21.json")
        x = np.array([2 * np.cos(0.4), np.sin(0.4)])
        normal = ellipse.outer_normal(x).vector
        xh = locate_xh(ellipse, x, 1.0, 0.1)
        width = width_of_intersection(TranslateProblem(ellipse, 1.0, xh), normal)
        self.assertAlmostEqual(width, 0.1, places=8)

    def test_range(self):
        disk = Ellipsoid.ball(2)
        self.assertRaises(InvalidParameterError, locate_xh, disk, [1, 0], 1.0, 2.0)
        self.assertRaises(InvalidParameterError, locate_xh, disk, [1, 0], 0.5, 1.0)
        self.assertRaises(InvalidParameterError, locate_xh, disk, [1, 0], 1.0, 0)
        self.assertRaises(InvalidParameterError, locate_xh, disk, [0.5, 0], 1.0, 0.1)
        self.assertRaises(InvalidParameterError, locate_xh, disk, [1, 0], 0, 0.1)

    def test_vertex(self):
        self.assertRaises(NotSmoothError, locate_xh, Polygon.square(), [1, 1], 1.0, 0.1)
