import math
from unittest import TestCase
from tests.base import load_body
from convgeom.bodies import Ellipsoid, Polygon
from convgeom.volume import (
    TranslateProblem,
    VolumeRegistry,
    Region,
    Placement,
    intersection_volume,
    body_volume,
    cap_volume,
)
from convgeom.volumes.planar import PlanarPolygonVolume
from convgeom.errors import BudgetExceededError, InvalidParameterError


def lens_area(d: float) -> float:
    return 2 * math.acos(d / 2) - d / 2 * math.sqrt(4 - d * d)


class TestPlanarVolume(TestCase):
    def test_lens_accuracy(self):
        disk = Ellipsoid.ball(2)
        estimate = intersection_volume(TranslateProblem(disk, 1.0, [1, 0]), tol=1e-6)
        self.assertEqual(estimate.method, "exact_poly_2d")
        self.assertLessEqual(abs(estimate.value - lens_area(1)), 1e-6)

    def test_lens_sweep(self):
        disk = Ellipsoid.ball(2)
        for d in (0.1, 0.5, 1.3, 1.9, 1.99):
            estimate = intersection_volume(TranslateProblem(disk, 1.0, [0, d]))
            self.assertLessEqual(abs(estimate.value - lens_area(d)), estimate.abs_error + 1e-9)

    def test_sandwich_brackets_area(self):
        disk = Ellipsoid.ball(2)
        region = TranslateProblem(disk, 1.0, [1, 0]).region()
        engine = PlanarPolygonVolume()
        for m in (16, 64, 256):
            a_in, a_out = engine.sandwich(region, m)
            self.assertLess(a_in, lens_area(1))
            self.assertGreater(a_out, lens_area(1))

    def test_polygons_are_exact(self):
        square = Polygon.square()
        region = TranslateProblem(square, 1.0, [0.5, -0.25]).region()
        a_in, a_out = PlanarPolygonVolume().sandwich(region, 16)
        self.assertEqual(a_in, a_out)
        self.assertAlmostEqual(a_in, 1.5 * 1.75, places=12)

    def test_different_moving_body(self):
        disk = Ellipsoid.ball(2)
        small = Ellipsoid.ball(2, 0.5)
        estimate = intersection_volume(TranslateProblem(disk, 1.0, [0.2, 0], other=small))
        self.assertAlmostEqual(estimate.value, math.pi / 4, places=5)

    def test_body_volume(self):
        self.assertAlmostEqual(body_volume(load_body("hexagon.json")).value, 7.5, places=12)
        estimate = body_volume(load_body("pball4.json"))
        expected = load_body("pball4.json").exact_volume()
        self.assertLessEqual(abs(estimate.value - expected), estimate.abs_error + 1e-9)

    def test_budget_exceeded(self):
        registry = VolumeRegistry(resolution=16, max_resolution=32)
        disk = Ellipsoid.ball(2)
        with self.assertRaises(BudgetExceededError) as cm:
            intersection_volume(TranslateProblem(disk, 1.0, [1, 0]), tol=1e-9, registry=registry)
        self.assertIsNotNone(cm.exception.estimate)
        self.assertEqual(cm.exception.estimate.method, "exact_poly_2d")

    def test_relative_tolerance(self):
        registry = VolumeRegistry(resolution=64, rtol=1e-3)
        disk = Ellipsoid.ball(2)
        estimate = intersection_volume(TranslateProblem(disk, 1.0, [1, 0]), tol=1e-12, registry=registry)
        self.assertLessEqual(estimate.abs_error, 1e-3 * estimate.value)

    def test_cut_region(self):
        disk = Ellipsoid.ball(2)
        estimate = cap_volume(disk, [0, 1], 1.0)
        self.assertAlmostEqual(estimate.value, math.pi / 2, places=5)

        square = Polygon.square()
        estimate = cap_volume(square, [1, 0], 0.5)
        self.assertAlmostEqual(estimate.value, 1.0, places=12)

    def test_cap_depth(self):
        disk = Ellipsoid.ball(2)
        self.assertRaises(InvalidParameterError, cap_volume, disk, [0, 1], 0)
        self.assertRaises(InvalidParameterError, cap_volume, disk, [0, 0], 0.5)

    def test_single_placement_region(self):
        region = Region((Placement(Ellipsoid.ball(2), [1.0, 2.0], 2.0),))
        self.assertTrue(region.contains([1.0, 3.9]))
        self.assertFalse(region.contains([1.0, 4.1]))
        self.assertIsNotNone(region.interior_point())
