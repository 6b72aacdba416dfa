import math
from unittest import TestCase
import numpy as np
from tests.base import load_body
from convgeom.bodies import Ellipsoid, Polygon, HalfspaceBody, DirectionGrid
from convgeom.convolution import convolution_body
from convgeom.errors import DeltaOutOfRangeError, InvalidParameterError

LENS = 2 * math.pi / 3 - math.sqrt(3) / 2


class TestConvolutionBody(TestCase):
    def test_disk_level(self):
        profile = convolution_body(Ellipsoid.ball(2), LENS, grid=16)
        np.testing.assert_allclose(profile.radii, 1.0, atol=1e-6)
        self.assertTrue(profile.is_even())
        self.assertTrue(profile.is_convex())
        self.assertLessEqual(profile.achieved_tol, 1e-5)
        self.assertEqual(profile.as_dict()["grid"], {"dim": 2, "resolution": 16, "size": 16})

    def test_square_level(self):
        profile = convolution_body(Polygon.square(), 2.25, grid=8)
        # F(x) = (2 - |x1|)(2 - |x2|) for the square [-1, 1]²
        self.assertAlmostEqual(profile.radii[0], 0.875, places=8)
        self.assertAlmostEqual(profile.radii[1], math.sqrt(2) / 2, places=8)
        self.assertAlmostEqual(profile.radii[2], 0.875, places=8)
        self.assertTrue(profile.is_even())

    def test_nested_levels(self):
        ellipse = load_body("ellipse21.json")
        low = convolution_body(ellipse, 1.0, grid=16)
        high = convolution_body(ellipse, 4.0, grid=16)
        self.assertTrue(np.all(low.radii > high.radii))

    def test_scaled_translate(self):
        disk = Ellipsoid.ball(2)
        profile = convolution_body(disk, 0.5, tau=0.5, grid=8)
        # the translate stays inside K while |x| <= 1/2, so F never exceeds π/4
        self.assertTrue(np.all(profile.radii > 0.5))
        self.assertTrue(np.all(profile.radii < 1.5))

    def test_spatial_cube(self):
        cube = HalfspaceBody.cube(3)
        profile = convolution_body(cube, 4.0, grid=DirectionGrid(3, 1))
        points = profile.points()
        values = np.prod(2 - np.abs(points), axis=1)
        np.testing.assert_allclose(values, 4.0, rtol=1e-7)
        self.assertTrue(profile.is_even())
        self.assertTrue(profile.is_convex(1e-6))

    def test_delta_range(self):
        disk = Ellipsoid.ball(2)
        self.assertRaises(DeltaOutOfRangeError, convolution_body, disk, 0, grid=8)
        self.assertRaises(DeltaOutOfRangeError, convolution_body, disk, math.pi, grid=8)
        self.assertRaises(DeltaOutOfRangeError, convolution_body, disk, 1.0, tau=0.5, grid=8)

    def test_invalid(self):
        disk = Ellipsoid.ball(2)
        self.assertRaises(InvalidParameterError, convolution_body, disk, 1.0, tau=0, grid=8)
        self.assertRaises(InvalidParameterError, convolution_body, disk, 1.0, grid=DirectionGrid(3, 0))
        self.assertRaises(InvalidParameterError, convolution_body, disk, 1.0, grid=7)


def lens3(d):
    # volume of the intersection of two unit balls at distance d
    return math.pi * (4 + d) * (2 - d) ** 2 / 12


class TestProfileLevels(TestCase):
    def test_spatial_ball_default_tolerance(self):
        profile = convolution_body(Ellipsoid.ball(3), 2.0, grid=DirectionGrid(3, 0))
        self.assertTrue(profile.is_even())
        for r in profile.radii:
            self.assertAlmostEqual(lens3(r), 2.0, delta=0.04)

    def test_square_diagonal(self):
        profile = convolution_body(Polygon.square(), 2.0, grid=8)
        # on the axes F = 2(2 - r), on the diagonal F = (2 - s)² with s = r/√2
        self.assertAlmostEqual(profile.radii[0], 1.0, places=8)
        self.assertAlmostEqual(profile.radii[1] / math.sqrt(2), 2 - math.sqrt(2), places=8)
        self.assertAlmostEqual(profile.radii[1], 2 * (2 - math.sqrt(2)) / math.sqrt(2), places=8)

    def test_level_sweep_is_nested(self):
        disk = Ellipsoid.ball(2)
        deltas = np.linspace(0.1, 3.0, 10)
        profiles = [convolution_body(disk, delta, grid=8) for delta in deltas]
        for outer, inner in zip(profiles, profiles[1:]):
            self.assertTrue(np.all(outer.radii > inner.radii))
        for profile in profiles:
            self.assertTrue(profile.is_convex())
